#include "gontd/gonality.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "gontd/errors.hpp"

namespace gontd {

namespace {

double candidate_budget(std::optional<double> requested) {
    if (requested) return *requested;
    if (const char* env = std::getenv("GONTD_MAX_CANDIDATES")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return kDefaultCandidateBudget;
}

}  // namespace

bool has_positive_rank(const MultiGraph& g, const Divisor& d) {
    if (d.size() != g.vertex_count()) throw DomainError("has_positive_rank: divisor length mismatch");
    if (!d.is_effective()) throw DomainError("has_positive_rank: divisor is not effective");
    if (!is_connected(g)) throw DomainError("has_positive_rank: graph is not connected");
    for (VertexId q = 0; q < g.vertex_count(); ++q) {
        // D_q(q) >= D(q), so a chip already on q settles this vertex.
        if (d[q] >= 1) continue;
        if (q_reduce(g, d, q).divisor[q] < 1) return false;
    }
    return true;
}

double gonality_search_space(std::size_t n, std::int64_t max_degree) {
    double total = 0;
    for (std::int64_t k = 1; k <= max_degree; ++k) {
        // C(n + k - 1, k)
        total += std::exp(std::lgamma(static_cast<double>(n) + static_cast<double>(k)) -
                          std::lgamma(static_cast<double>(k) + 1) - std::lgamma(static_cast<double>(n)));
    }
    return std::round(total);
}

std::optional<GonalityResult> dgon_bruteforce(const MultiGraph& g, std::int64_t max_degree,
                                              std::optional<double> budget) {
    if (max_degree < 1) throw DomainError("dgon_bruteforce: max degree must be positive");
    if (!is_connected(g)) throw DomainError("dgon_bruteforce: graph is not connected");
    const double space = gonality_search_space(g.vertex_count(), max_degree);
    const double limit = candidate_budget(budget);
    if (space > limit) {
        std::ostringstream msg;
        msg << "dgon_bruteforce: search space of " << space << " divisors exceeds the budget of " << limit;
        throw ResourceError(msg.str(), space);
    }

    std::optional<GonalityResult> found;
    for (std::int64_t k = 1; k <= max_degree && !found; ++k) {
        for_each_effective_divisor(g.vertex_count(), k, [&](const Divisor& d) {
            if (!has_positive_rank(g, d)) return false;
            found = GonalityResult{k, d};
            return true;
        });
    }
    return found;
}

}  // namespace gontd
