#include "gontd/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gontd/errors.hpp"

namespace gontd {

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

long TreeDecomposition::width() const {
    long w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<long>(b.size()) - 1);
    return w;
}

TreeDecReport validate_treedec(const MultiGraph& g, const TreeDecomposition& td) {
    using R = ValidationReport;
    const auto n = g.vertex_count();
    const auto nodes = td.bags.size();
    TreeDecReport report{R::success(), td.width()};

    if (nodes == 0) {
        if (n != 0) report.status = R::failure("condition 1: decomposition has no bags");
        return report;
    }
    for (std::size_t i = 0; i < nodes; ++i)
        if (td.bags[i].universe() != n) {
            report.status = R::failure("bag " + std::to_string(i + 1) + " ranges over the wrong vertex count", i);
            return report;
        }

    if (td.edges.size() != nodes - 1) {
        report.status = R::failure("not a tree: " + std::to_string(td.edges.size()) + " edges on " +
                                   std::to_string(nodes) + " nodes");
        return report;
    }
    DisjointSets ds(nodes);
    for (auto [a, b] : td.edges) {
        if (a >= nodes || b >= nodes || a == b) {
            report.status = R::failure("not a tree: invalid edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
            return report;
        }
        if (!ds.unite(a, b)) {
            report.status = R::failure("not a tree: cycle through edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
            return report;
        }
    }

    VertexSet covered(n);
    for (const auto& b : td.bags) covered |= b;
    if (covered != g.all_vertices()) {
        const VertexId v = (g.all_vertices() - covered).front();
        report.status = R::failure("condition 1: vertex " + g.name(v) + " is in no bag", v);
        return report;
    }

    for (const auto& e : g.edges()) {
        const bool hit = std::any_of(td.bags.begin(), td.bags.end(),
                                     [&](const VertexSet& b) { return b.contains(e.u) && b.contains(e.v); });
        if (!hit) {
            report.status = R::failure("condition 2: edge " + g.name(e.u) + "-" + g.name(e.v) + " is in no bag", e.u);
            return report;
        }
    }

    // Nodes holding v induce a forest; it is a subtree iff it has one edge fewer than nodes.
    for (VertexId v = 0; v < n; ++v) {
        std::size_t holders = 0, links = 0;
        for (const auto& b : td.bags) holders += b.contains(v);
        for (auto [a, b] : td.edges) links += td.bags[a].contains(v) && td.bags[b].contains(v);
        if (links + 1 != holders) {
            report.status = R::failure("condition 3 at vertex " + g.name(v) + ": its bags do not form a subtree", v);
            return report;
        }
    }
    return report;
}

TreeDecomposition mss_to_treedec(const MultiGraph& g, const MssTree& t) {
    if (auto rep = validate_mss(g, t, t.max_searchers()); !rep)
        throw DomainError("mss_to_treedec: invalid search strategy: " + rep.violation);

    TreeDecomposition td;
    std::vector<std::size_t> id(t.nodes.size());
    std::vector<std::size_t> stack{t.root};
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        id[i] = td.bags.size();
        td.bags.push_back(t.nodes[i].position.x);
        if (const auto& p = t.nodes[i].parent) td.edges.emplace_back(id[*p], id[i]);
        const auto& ch = t.nodes[i].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return td;
}

TreeDecomposition merge_equal_adjacent_bags(const TreeDecomposition& td) {
    DisjointSets ds(td.bags.size());
    for (auto [a, b] : td.edges)
        if (td.bags[a] == td.bags[b]) ds.unite(a, b);
    std::vector<std::size_t> id(td.bags.size(), SIZE_MAX);
    TreeDecomposition out;
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        const auto rep = ds.find(i);
        if (id[rep] == SIZE_MAX) {
            id[rep] = out.bags.size();
            out.bags.push_back(td.bags[i]);
        }
    }
    for (auto [a, b] : td.edges) {
        const auto ra = id[ds.find(a)], rb = id[ds.find(b)];
        if (ra != rb) out.edges.emplace_back(ra, rb);
    }
    return out;
}

TreeDecomposition treedec_from_elimination_order(const MultiGraph& g, const std::vector<VertexId>& order) {
    const auto n = g.vertex_count();
    if (order.size() != n) throw DomainError("elimination order must list every vertex once");
    std::vector<std::size_t> rank(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || rank[order[i]] != SIZE_MAX) throw DomainError("elimination order must list every vertex once");
        rank[order[i]] = i;
    }

    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    TreeDecomposition td;
    td.bags.resize(n, VertexSet(n));
    std::vector<VertexSet> later(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = order[i];
        VertexSet nb(n);
        for (VertexId w : adj[v])
            if (rank[w] > i) nb.insert(w);
        later[i] = nb;
        td.bags[i] = nb;
        td.bags[i].insert(v);
        for (VertexId a : nb) {
            adj[a] |= nb;
            adj[a].erase(a);
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t parent = i + 1;
        if (!later[i].empty()) {
            parent = SIZE_MAX;
            for (VertexId w : later[i]) parent = std::min(parent, rank[w]);
        }
        td.edges.emplace_back(i, parent);
    }
    return td;
}

RefinementMap RefinementMap::identity(std::size_t n) {
    RefinementMap map{n, {}};
    for (VertexId v = 0; v < n; ++v) map.roles.push_back(OriginalVertex{v});
    return map;
}

ValidationReport validate_refinement(const MultiGraph& original, const MultiGraph& refined, const RefinementMap& map) {
    using R = ValidationReport;
    const auto n0 = original.vertex_count();
    const auto n1 = refined.vertex_count();
    if (map.original_vertex_count != n0) return R::failure("map describes a different original vertex count");
    if (map.roles.size() != n1) return R::failure("map does not classify every refined vertex");

    std::vector<VertexId> image(n0, static_cast<VertexId>(n1));
    std::vector<std::vector<std::pair<std::size_t, VertexId>>> subdivided(original.edge_count());
    for (VertexId v = 0; v < n1; ++v) {
        if (const auto* o = std::get_if<OriginalVertex>(&map.roles[v])) {
            if (o->vertex >= n0 || image[o->vertex] != n1) return R::failure("original vertices are not in bijection", v);
            image[o->vertex] = v;
        } else if (const auto* s = std::get_if<SubdivisionVertex>(&map.roles[v])) {
            if (s->edge >= original.edge_count()) return R::failure("subdivision of a non-existent edge", v);
            const auto& e = original.edge(s->edge);
            if (!((s->from == e.u && s->to == e.v) || (s->from == e.v && s->to == e.u)))
                return R::failure("subdivision endpoints do not match the edge", v);
            subdivided[s->edge].emplace_back(s->position, v);
        } else {
            const auto& leaf = std::get<AddedLeaf>(map.roles[v]);
            if (leaf.anchor >= n1 || leaf.anchor == v) return R::failure("added leaf with invalid anchor", v);
        }
    }
    for (VertexId v = 0; v < n0; ++v)
        if (image[v] == n1) return R::failure("original vertex " + original.name(v) + " is missing");

    // Leaves must hang, possibly through other leaves, from the refined graph proper.
    for (VertexId v = 0; v < n1; ++v) {
        VertexId cur = v;
        for (std::size_t steps = 0; std::holds_alternative<AddedLeaf>(map.roles[cur]); ++steps) {
            if (steps > n1) return R::failure("added leaves are anchored in a cycle", v);
            cur = std::get<AddedLeaf>(map.roles[cur]).anchor;
        }
    }

    std::vector<std::pair<VertexId, VertexId>> expected;
    auto add = [&](VertexId a, VertexId b) { expected.emplace_back(std::min(a, b), std::max(a, b)); };
    for (EdgeId e = 0; e < original.edge_count(); ++e) {
        auto& path = subdivided[e];
        std::sort(path.begin(), path.end());
        VertexId from = image[original.edge(e).u], to = image[original.edge(e).v];
        if (!path.empty()) {
            const auto& first = std::get<SubdivisionVertex>(map.roles[path.front().second]);
            from = image[first.from];
            to = image[first.to];
        }
        VertexId prev = from;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const auto& s = std::get<SubdivisionVertex>(map.roles[path[i].second]);
            if (path[i].first != i + 1 || image[s.from] != from)
                return R::failure("subdivision positions of an edge are not 1..s from one endpoint", path[i].second);
            add(prev, path[i].second);
            prev = path[i].second;
        }
        add(prev, to);
    }
    for (VertexId v = 0; v < n1; ++v)
        if (const auto* leaf = std::get_if<AddedLeaf>(&map.roles[v])) add(v, leaf->anchor);

    std::vector<std::pair<VertexId, VertexId>> actual;
    for (const auto& e : refined.edges()) actual.emplace_back(e.u, e.v);
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) return R::failure("refined graph's edges do not match the described refinement");
    return R::success();
}

TreeDecomposition contract_refinement(const TreeDecomposition& td, const RefinementMap& map) {
    const auto n0 = map.original_vertex_count;
    const auto n1 = map.roles.size();
    TreeDecomposition out;
    out.edges = td.edges;
    out.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) {
        if (bag.universe() != n1) throw DomainError("contract_refinement: bag is not over the refined graph");
        VertexSet b(n0);
        for (VertexId v : bag) {
            const auto& role = map.roles[v];
            if (const auto* o = std::get_if<OriginalVertex>(&role)) {
                if (o->vertex >= n0) throw DomainError("contract_refinement: original vertex out of range");
                b.insert(o->vertex);
            } else if (const auto* s = std::get_if<SubdivisionVertex>(&role)) {
                if (s->from >= n0) throw DomainError("contract_refinement: subdivision endpoint out of range");
                b.insert(s->from);
            }
        }
        out.bags.push_back(std::move(b));
    }
    return out;
}

}  // namespace gontd
