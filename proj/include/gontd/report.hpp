#pragma once

#include <optional>
#include <string>

namespace gontd {

/// Outcome of a structural check. Violations are data, not exceptions.
struct ValidationReport {
    bool ok = true;
    std::string violation;              // empty when ok
    std::optional<std::size_t> where;   // offending node / vertex, when meaningful

    explicit operator bool() const noexcept { return ok; }

    static ValidationReport success() { return {}; }
    static ValidationReport failure(std::string what, std::optional<std::size_t> at = std::nullopt) {
        return {false, std::move(what), at};
    }
};

}  // namespace gontd
