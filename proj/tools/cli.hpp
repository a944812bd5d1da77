#pragma once

#include <iosfwd>

namespace gontd {

// Exit codes: 0 success, 1 domain/validation/resource failure, 2 malformed input or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMalformed = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gontd
