#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "gontd/errors.hpp"
#include "gontd/tree_decomposition.hpp"

namespace gontd {

namespace {

std::size_t vertex_cap_from_env(std::optional<std::size_t> requested) {
    if (requested) return *requested;
    if (const char* env = std::getenv("GONTD_TW_MAX_VERTICES")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultTreewidthVertexCap;
}

// Vertices outside s ∪ {v} reachable from v through paths whose interior lies in s.
int boundary_through(const std::vector<std::uint32_t>& adj, std::uint32_t s, unsigned v) {
    std::uint32_t reached = 0, inside = 0;
    std::uint32_t frontier = std::uint32_t{1} << v;
    const std::uint32_t start = frontier;
    while (frontier) {
        const unsigned u = static_cast<unsigned>(std::countr_zero(frontier));
        frontier &= frontier - 1;
        for (std::uint32_t nb = adj[u] & ~start; nb; nb &= nb - 1) {
            const std::uint32_t bit = nb & -nb;
            if (s & bit) {
                if (!(inside & bit)) {
                    inside |= bit;
                    frontier |= bit;
                }
            } else {
                reached |= bit;
            }
        }
    }
    return std::popcount(reached);
}

}  // namespace

ExactTreewidth exact_treewidth(const MultiGraph& g, std::optional<std::size_t> vertex_cap) {
    const auto n = g.vertex_count();
    const auto cap = std::min<std::size_t>(vertex_cap_from_env(vertex_cap), 24);
    if (n > cap)
        throw ResourceError("treewidth_bruteforce: " + std::to_string(n) + " vertices exceed the cap of " +
                                std::to_string(cap),
                            static_cast<double>(std::uint64_t{1} << std::min<std::size_t>(n, 62)));
    if (n == 0) return {};

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= std::uint32_t{1} << e.v;
        adj[e.v] |= std::uint32_t{1} << e.u;
    }

    // best[s]: minimum over orders eliminating exactly s first of the largest
    // neighbourhood seen so far. Subsets are visited in increasing numeric
    // order, so s \ {v} is always ready before s.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<int> best(std::size_t{full} + 1, std::numeric_limits<int>::max());
    std::vector<std::uint8_t> last(std::size_t{full} + 1, 0);
    best[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            const auto v = static_cast<unsigned>(std::countr_zero(rest));
            const std::uint32_t prev = s & ~(std::uint32_t{1} << v);
            const int cost = std::max(best[prev], boundary_through(adj, prev, v));
            if (cost < best[s]) {
                best[s] = cost;
                last[s] = static_cast<std::uint8_t>(v);
            }
        }
    }

    ExactTreewidth out{best[full], {}};
    for (std::uint32_t s = full; s; s &= ~(std::uint32_t{1} << last[s])) out.order.push_back(last[s]);
    std::reverse(out.order.begin(), out.order.end());
    return out;
}

std::optional<long> treewidth_bruteforce(const MultiGraph& g, long max_width, std::optional<std::size_t> vertex_cap) {
    if (max_width < 1) throw DomainError("treewidth_bruteforce: max width must be positive");
    const long tw = exact_treewidth(g, vertex_cap).width;
    if (tw > max_width) return std::nullopt;
    return tw;
}

}  // namespace gontd
