#include "gontd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "gontd/errors.hpp"

namespace gontd {

MultiGraph::MultiGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                       std::vector<std::string> labels)
    : n_(n), adjacency_(n), incidence_(n), degree_(n, 0), labels_(std::move(labels)) {
    if (!labels_.empty()) {
        if (labels_.size() != n) throw DomainError("label count does not match vertex count");
        std::set<std::string> seen;
        for (const auto& l : labels_) {
            if (l.empty()) throw DomainError("empty vertex label");
            if (!seen.insert(l).second) throw DomainError("duplicate vertex label '" + l + "'");
        }
    }

    edges_.reserve(edges.size());
    std::vector<std::map<VertexId, std::int64_t>> mult(n);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw DomainError("edge endpoint out of range");
        if (a == b) throw DomainError("loop at vertex " + std::to_string(a + 1) + " (loops are not allowed)");
        const auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({std::min(a, b), std::max(a, b)});
        incidence_[a].push_back(id);
        incidence_[b].push_back(id);
        ++mult[a][b];
        ++mult[b][a];
        ++degree_[a];
        ++degree_[b];
    }
    for (std::size_t v = 0; v < n; ++v) {
        adjacency_[v].reserve(mult[v].size());
        for (auto [w, m] : mult[v]) adjacency_[v].push_back({w, m});
    }
}

std::int64_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
    const auto& adj = adjacency_.at(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Neighbor& nb, VertexId x) { return nb.vertex < x; });
    return it != adj.end() && it->vertex == v ? it->multiplicity : 0;
}

std::string MultiGraph::name(VertexId v) const {
    if (v >= n_) throw DomainError("vertex out of range");
    return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

std::optional<VertexId> MultiGraph::find(const std::string& name) const {
    if (!labels_.empty()) {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<VertexId>(it - labels_.begin());
    }
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), idx);
    if (ec != std::errc{} || ptr != name.data() + name.size() || idx == 0 || idx > n_) return std::nullopt;
    return static_cast<VertexId>(idx - 1);
}

IntMatrix laplacian(const MultiGraph& g) {
    const auto n = g.vertex_count();
    IntMatrix q(n, std::vector<std::int64_t>(n, 0));
    for (VertexId u = 0; u < n; ++u) {
        q[u][u] = g.degree(u);
        for (const auto& nb : g.neighbors(u)) q[u][nb.vertex] = -nb.multiplicity;
    }
    return q;
}

std::int64_t outdeg(const MultiGraph& g, const VertexSet& u, VertexId v) {
    if (!u.contains(v)) throw DomainError("outdeg: vertex " + g.name(v) + " is not in the set");
    std::int64_t out = 0;
    for (const auto& nb : g.neighbors(v))
        if (!u.contains(nb.vertex)) out += nb.multiplicity;
    return out;
}

std::vector<VertexSet> flaps(const MultiGraph& g, const VertexSet& x) {
    const auto n = g.vertex_count();
    std::vector<VertexSet> out;
    VertexSet seen = x;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(n);
        stack.push_back(s);
        seen.insert(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (const auto& nb : g.neighbors(v)) {
                if (!seen.contains(nb.vertex)) {
                    seen.insert(nb.vertex);
                    stack.push_back(nb.vertex);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet neighbors_in(const MultiGraph& g, VertexId v, const VertexSet& r) {
    VertexSet out(g.vertex_count());
    for (const auto& nb : g.neighbors(v))
        if (r.contains(nb.vertex)) out.insert(nb.vertex);
    return out;
}

VertexSet neighborhood(const MultiGraph& g, const VertexSet& u) {
    VertexSet out(g.vertex_count());
    for (VertexId v : u)
        for (const auto& nb : g.neighbors(v))
            if (!u.contains(nb.vertex)) out.insert(nb.vertex);
    return out;
}

bool is_connected(const MultiGraph& g) {
    return g.vertex_count() > 0 && flaps(g, g.empty_set()).size() == 1;
}

std::int64_t boundary_size(const MultiGraph& g, const VertexSet& u) {
    std::int64_t total = 0;
    for (const auto& e : g.edges())
        if (u.contains(e.u) != u.contains(e.v)) ++total;
    return total;
}

}  // namespace gontd
