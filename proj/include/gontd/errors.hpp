#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gontd {

/// Input violates a mathematical precondition (loop edge, non-effective
/// divisor, disconnected graph, divisor without positive rank, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A brute-force search would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, double search_space)
        : std::runtime_error(what), search_space_(search_space) {}

    double search_space() const noexcept { return search_space_; }

private:
    double search_space_;
};

/// A proven bound or invariant was violated: always an implementation bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("chip count overflow");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("chip count overflow");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("chip count overflow");
    return out;
}

}  // namespace gontd
