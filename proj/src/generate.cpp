#include "gontd/generate.hpp"

#include <vector>

#include "gontd/errors.hpp"

namespace gontd {

MultiGraph random_connected_multigraph(std::size_t n, std::size_t extra_edges, std::int64_t max_multiplicity,
                                       std::mt19937_64& rng) {
    if (n == 0) throw DomainError("random_connected_multigraph: need at least one vertex");
    if (max_multiplicity < 1) throw DomainError("random_connected_multigraph: max multiplicity must be positive");
    std::vector<std::vector<std::int64_t>> mult(n, std::vector<std::int64_t>(n, 0));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v) {
        const auto u = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
        edges.emplace_back(u, v);
        ++mult[u][v];
        ++mult[v][u];
    }
    std::vector<std::pair<VertexId, VertexId>> open;
    for (std::size_t added = 0; added < extra_edges && n > 1; ++added) {
        open.clear();
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (mult[u][v] < max_multiplicity) open.emplace_back(u, v);
        if (open.empty()) break;
        const auto [u, v] = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        edges.emplace_back(u, v);
        ++mult[u][v];
        ++mult[v][u];
    }
    return MultiGraph(n, edges);
}

}  // namespace gontd
