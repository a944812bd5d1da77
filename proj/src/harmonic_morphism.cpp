#include "gontd/harmonic_morphism.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <variant>

#include "gontd/errors.hpp"

namespace gontd {

bool is_tree(const MultiGraph& t) {
    return t.vertex_count() >= 1 && t.edge_count() + 1 == t.vertex_count() && is_connected(t);
}

ValidationReport check_morphism(const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f) {
    using R = ValidationReport;
    if (!is_tree(t)) return R::failure("codomain is not a tree");
    if (f.vertex_map.size() != g.vertex_count()) return R::failure("vertex map does not cover every vertex");
    if (f.edge_map.size() != g.edge_count() || f.index.size() != g.edge_count())
        return R::failure("edge map or index does not cover every edge");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (f.vertex_map[v] >= t.vertex_count()) return R::failure("vertex " + g.name(v) + " maps outside the tree", v);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::string at = "edge " + std::to_string(e + 1);
        if (f.edge_map[e] >= t.edge_count()) return R::failure(at + " maps outside the tree", e);
        if (f.index[e] < 1) return R::failure(at + " has non-positive index", e);
        const auto& ge = g.edge(e);
        const auto& te = t.edge(f.edge_map[e]);
        const VertexId a = f.vertex_map[ge.u], b = f.vertex_map[ge.v];
        if (std::minmax(a, b) != std::minmax(te.u, te.v))
            return R::failure(at + " (" + g.name(ge.u) + "-" + g.name(ge.v) + ") maps to a tree edge not joining its endpoints' images", e);
    }
    return R::success();
}

HarmonicResult harmonic_certificate(const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f) {
    HarmonicResult out;
    out.status = check_morphism(g, t, f);
    if (!out.status) return out;
    if (g.edge_count() == 0) {
        out.status = ValidationReport::failure("graph has no edges; the degree is undefined");
        return out;
    }

    HarmonicCertificate cert;
    cert.m.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::map<EdgeId, std::int64_t> toward;
        for (EdgeId e : g.incident_edges(v)) toward[f.edge_map[e]] = checked_add(toward[f.edge_map[e]], f.index[e]);
        std::optional<std::int64_t> common;
        for (EdgeId te : t.incident_edges(f.vertex_map[v])) {
            const auto s = toward.count(te) ? toward[te] : 0;
            if (common && *common != s) {
                out.status = ValidationReport::failure("not harmonic at vertex " + g.name(v) + ": index sums " +
                                                           std::to_string(*common) + " and " + std::to_string(s) +
                                                           " toward different tree edges",
                                                       v);
                return out;
            }
            common = s;
        }
        cert.m[v] = common.value_or(0);
    }

    std::vector<std::int64_t> by_vertex(t.vertex_count(), 0), by_edge(t.edge_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        by_vertex[f.vertex_map[v]] = checked_add(by_vertex[f.vertex_map[v]], cert.m[v]);
    for (EdgeId e = 0; e < g.edge_count(); ++e) by_edge[f.edge_map[e]] = checked_add(by_edge[f.edge_map[e]], f.index[e]);
    cert.degree = by_edge.front();
    for (VertexId w = 0; w < t.vertex_count(); ++w)
        if (by_vertex[w] != cert.degree) {
            out.status = ValidationReport::failure("degree identity fails at tree vertex " + t.name(w) + ": fibre sum " +
                                                       std::to_string(by_vertex[w]) + ", expected " +
                                                       std::to_string(cert.degree),
                                                   w);
            return out;
        }
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        if (by_edge[e] != cert.degree) {
            out.status = ValidationReport::failure("degree identity fails at tree edge " + std::to_string(e + 1), e);
            return out;
        }
    out.certificate = std::move(cert);
    return out;
}

TreeDecomposition morphism_to_treedec(const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f,
                                      MorphismTdStats* stats) {
    if (!is_connected(g)) throw DomainError("morphism_to_treedec: graph is not connected");
    if (auto rep = check_morphism(g, t, f); !rep) throw DomainError("morphism_to_treedec: " + rep.violation);
    MorphismTdStats local;
    MorphismTdStats& st = stats ? *stats : local;
    const auto n = g.vertex_count();

    if (g.edge_count() == 0) {
        st.bag_insertions += n;
        return {{g.all_vertices()}, {}};
    }
    auto harmonic = harmonic_certificate(g, t, f);
    if (!harmonic.certificate) throw DomainError("morphism_to_treedec: " + harmonic.status.violation);
    const auto k = harmonic.certificate->degree;

    std::vector<VertexSet> fibre(t.vertex_count(), VertexSet(n));
    for (VertexId v = 0; v < n; ++v) {
        if (harmonic.certificate->m[v] < 1) throw InternalError("morphism_to_treedec: m_f(v) < 1 on a connected graph");
        fibre[f.vertex_map[v]].insert(v);
    }
    for (const auto& fb : fibre) {
        if (fb.empty()) throw InternalError("morphism_to_treedec: morphism is not surjective");
        if (static_cast<std::int64_t>(fb.size()) > k) throw InternalError("morphism_to_treedec: vertex fibre exceeds deg(f)");
    }

    // Orient tree edges away from tree vertex 0.
    std::vector<std::size_t> depth(t.vertex_count(), SIZE_MAX);
    std::queue<VertexId> bfs;
    depth[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        const VertexId w = bfs.front();
        bfs.pop();
        for (const auto& nb : t.neighbors(w))
            if (depth[nb.vertex] == SIZE_MAX) {
                depth[nb.vertex] = depth[w] + 1;
                bfs.push(nb.vertex);
            }
    }

    struct FibreEdge {
        VertexId v, w;  // v over the parent-side endpoint, w over the child side
        EdgeId id;
    };
    std::vector<std::vector<FibreEdge>> over(t.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& te = t.edge(f.edge_map[e]);
        const VertexId parent_side = depth[te.u] < depth[te.v] ? te.u : te.v;
        const auto& ge = g.edge(e);
        const bool u_up = f.vertex_map[ge.u] == parent_side;
        over[f.edge_map[e]].push_back({u_up ? ge.u : ge.v, u_up ? ge.v : ge.u, e});
    }
    for (auto& list : over) {
        if (static_cast<std::int64_t>(list.size()) > k) throw InternalError("morphism_to_treedec: edge fibre exceeds deg(f)");
        std::sort(list.begin(), list.end(),
                  [](const FibreEdge& a, const FibreEdge& b) { return std::tie(a.v, a.w, a.id) < std::tie(b.v, b.w, b.id); });
    }

    TreeDecomposition td;
    auto add_node = [&](VertexSet bag, std::optional<std::size_t> attach) {
        const auto id = td.bags.size();
        td.bags.push_back(std::move(bag));
        if (attach) td.edges.emplace_back(*attach, id);
        return id;
    };

    struct VisitVertex {
        VertexId w;
        std::optional<std::size_t> attach;
    };
    struct VisitEdge {
        EdgeId e;
        VertexId child;
        std::size_t attach;
    };
    std::vector<std::variant<VisitVertex, VisitEdge>> stack{VisitVertex{0, std::nullopt}};
    while (!stack.empty()) {
        auto task = stack.back();
        stack.pop_back();
        if (const auto* vv = std::get_if<VisitVertex>(&task)) {
            st.bag_insertions += fibre[vv->w].size();
            const auto node = add_node(fibre[vv->w], vv->attach);
            const auto inc = t.incident_edges(vv->w);
            for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
                const auto& te = t.edge(*it);
                const VertexId other = te.u == vv->w ? te.v : te.u;
                if (depth[other] > depth[vv->w]) stack.push_back(VisitEdge{*it, other, node});
            }
        } else {
            const auto& ve = std::get<VisitEdge>(task);
            const auto& list = over[ve.e];
            const std::size_t kk = list.size();
            std::size_t attach = ve.attach;
            for (std::size_t r = 1; r <= kk; ++r) {
                VertexSet bag(n);
                for (std::size_t s = r; s <= kk; ++s) bag.insert(list[s - 1].v);
                for (std::size_t s = 1; s <= r; ++s) bag.insert(list[s - 1].w);
                st.bag_insertions += kk + 1;
                attach = add_node(std::move(bag), attach);
            }
            stack.push_back(VisitVertex{ve.child, attach});
        }
    }
    return td;
}

TreeDecomposition stable_treedec(const MultiGraph& original, const MultiGraph& refined, const RefinementMap& map,
                                 const MultiGraph& t, const FiniteMorphism& f, MorphismTdStats* stats) {
    if (auto rep = validate_refinement(original, refined, map); !rep)
        throw DomainError("stable_treedec: invalid refinement: " + rep.violation);
    if (!is_connected(original)) throw DomainError("stable_treedec: graph is not connected");
    if (original.edge_count() == 0) return {{original.all_vertices()}, {}};
    return contract_refinement(morphism_to_treedec(refined, t, f, stats), map);
}

}  // namespace gontd
