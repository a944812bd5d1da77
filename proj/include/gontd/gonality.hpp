#pragma once

#include <cstdint>
#include <optional>

#include "gontd/divisor.hpp"

namespace gontd {

struct GonalityResult {
    std::int64_t value = 0;
    Divisor witness;
};

/// Default cap on the number of candidate divisors dgon_bruteforce may test.
/// Overridden by the GONTD_MAX_CANDIDATES environment variable.
inline constexpr double kDefaultCandidateBudget = 5e6;

/// True iff every q-reduced form of d keeps a chip on q. Throws DomainError
/// for non-effective d or a disconnected graph.
bool has_positive_rank(const MultiGraph& g, const Divisor& d);

/// Number of effective divisors of degree 1..max_degree on n vertices.
double gonality_search_space(std::size_t n, std::int64_t max_degree);

/// Smallest degree <= max_degree of a positive-rank effective divisor.
///
/// Degrees are tried in ascending order; within a degree, divisors are visited
/// as sorted vertex multisets in lexicographic order ([a,a,a] before
/// [a,a,b]), so the witness piles chips on low-index vertices first. Throws
/// ResourceError when the search space exceeds `budget` (or the environment
/// override when budget is not given).
std::optional<GonalityResult> dgon_bruteforce(const MultiGraph& g, std::int64_t max_degree,
                                              std::optional<double> budget = std::nullopt);

/// Calls visit(d) for each effective divisor of the given degree in the order
/// dgon_bruteforce uses. Stops early when visit returns true.
template <class Visit>
bool for_each_effective_divisor(std::size_t n, std::int64_t deg, Visit&& visit);

}  // namespace gontd

#include "gontd/detail/enumerate.hpp"
