#include "support.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "gontd/generate.hpp"
#include "gontd/io.hpp"

namespace testing {

std::string fixture_path(const std::string& name) { return std::string(GONTD_FIXTURE_DIR) + "/" + name; }

namespace {

std::vector<std::string> letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 26 ? std::string(1, char('a' + i)) : "v" + std::to_string(i));
    return out;
}

}  // namespace

MultiGraph seven_vertex_example() { return io::load_graph(fixture_path("gon3_seven.json")); }

MultiGraph cycle4() { return labeled(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

MultiGraph path3_tree() {
    const std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {1, 2}};
    return MultiGraph(3, e, {"t0", "t1", "t2"});
}

FiniteMorphism cycle4_fold() { return {{0, 1, 2, 1}, {0, 1, 1, 0}, {1, 1, 1, 1}}; }

MultiGraph labeled(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    return MultiGraph(n, edges, letters(n));
}

MultiGraph path_graph(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return labeled(n, e);
}

MultiGraph cycle_graph(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId v = 0; v < n; ++v) e.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    return labeled(n, e);
}

MultiGraph banana_graph(std::size_t m) { return labeled(2, std::vector<std::pair<VertexId, VertexId>>(m, {0, 1})); }

MultiGraph star_graph(std::size_t leaves) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return labeled(leaves + 1, e);
}

MultiGraph tree_from_pruefer(std::size_t n, const std::vector<VertexId>& code) {
    if (n == 1) return labeled(1, {});
    if (code.size() + 2 != n) throw std::invalid_argument("Pruefer code has the wrong length");
    std::vector<std::size_t> deg(n, 1);
    for (auto v : code) ++deg[v];
    std::vector<std::pair<VertexId, VertexId>> e;
    for (auto v : code) {
        VertexId leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        e.emplace_back(leaf, v);
        --deg[leaf];
        --deg[v];
    }
    std::vector<VertexId> last;
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] == 1) last.push_back(v);
    e.emplace_back(last[0], last[1]);
    return labeled(n, e);
}

MultiGraph random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<VertexId> code;
    for (std::size_t i = 0; n >= 2 && i + 2 < n; ++i)
        code.push_back(static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)));
    return tree_from_pruefer(n, code);
}

Divisor divisor_of(const MultiGraph& g, const std::string& text) {
    // accepts "a:3 c:1" as well as the sum form "3a+c"
    if (text.find(':') != std::string::npos || text.empty()) return io::parse_divisor(g, text);
    Divisor d(g.vertex_count());
    std::istringstream ss(text);
    for (std::string term; std::getline(ss, term, '+');) {
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        const std::int64_t coeff = digits ? std::stoll(term.substr(0, digits)) : 1;
        d[*g.find(term.substr(digits))] += coeff;
    }
    return d;
}

VertexSet set_of(const MultiGraph& g, const std::string& names) {
    VertexSet s(g.vertex_count());
    for (char c : names) s.insert(*g.find(std::string(1, c)));
    return s;
}

const std::vector<MultiGraph>& connected_simple_graphs(std::size_t max_n) {
    static std::map<std::size_t, std::vector<MultiGraph>> cache;
    if (auto it = cache.find(max_n); it != cache.end()) return it->second;
    auto& out = cache[max_n];
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) {
                index[u][v] = index[v][u] = static_cast<int>(pairs.size());
                pairs.emplace_back(u, v);
            }
        std::vector<std::vector<int>> relabel;  // per permutation: edge index -> edge index
        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> r(pairs.size());
            for (std::size_t e = 0; e < pairs.size(); ++e) r[e] = index[perm[pairs[e].first]][perm[pairs[e].second]];
            relabel.push_back(std::move(r));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::set<std::uint32_t> seen;
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            // connectivity by flood fill over the mask
            std::uint32_t reached = 1, frontier = 1;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::size_t e = 0; e < pairs.size(); ++e) {
                    if (!(mask >> e & 1)) continue;
                    const auto [u, v] = pairs[e];
                    if (frontier >> u & 1) next |= 1u << v;
                    if (frontier >> v & 1) next |= 1u << u;
                }
                frontier = next & ~reached;
                reached |= next;
            }
            if (reached != (1u << n) - 1) continue;
            std::uint32_t canon = UINT32_MAX;
            for (const auto& r : relabel) {
                std::uint32_t image = 0;
                for (std::uint32_t m = mask; m; m &= m - 1) image |= 1u << r[std::countr_zero(m)];
                canon = std::min(canon, image);
            }
            if (!seen.insert(canon).second) continue;
            std::vector<std::pair<VertexId, VertexId>> e;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (canon >> i & 1) e.push_back(pairs[i]);
            out.push_back(labeled(n, e));
        }
    }
    return out;
}

std::vector<MultiGraph> random_multigraphs(std::size_t count, std::size_t max_n, std::int64_t max_mult, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<MultiGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
        const auto extra = std::uniform_int_distribution<std::size_t>(0, n)(rng);
        const auto g = random_connected_multigraph(n, extra, max_mult, rng);
        std::vector<std::pair<VertexId, VertexId>> e;
        for (const auto& edge : g.edges()) e.emplace_back(edge.u, edge.v);
        out.push_back(labeled(n, e));
    }
    return out;
}

std::vector<MultiGraph> all_labeled_trees(std::size_t n) {
    if (n <= 2) return {path_graph(n)};
    std::vector<MultiGraph> out;
    std::vector<VertexId> code(n - 2, 0);
    while (true) {
        out.push_back(tree_from_pruefer(n, code));
        std::size_t i = 0;
        while (i < code.size() && ++code[i] == n) code[i++] = 0;
        if (i == code.size()) break;
    }
    return out;
}

Divisor random_effective(std::size_t n, std::int64_t degree, std::mt19937_64& rng) {
    Divisor d(n);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    for (std::int64_t i = 0; i < degree; ++i) ++d[pick(rng)];
    return d;
}

namespace {

Divisor oracle_fire(const MultiGraph& g, Divisor d, std::uint32_t mask) {
    for (const auto& e : g.edges()) {
        const bool in_u = mask >> e.u & 1, in_v = mask >> e.v & 1;
        if (in_u == in_v) continue;
        const VertexId from = in_u ? e.u : e.v, to = in_u ? e.v : e.u;
        --d[from];
        ++d[to];
    }
    return d;
}

}  // namespace

Divisor random_equivalent(const MultiGraph& g, const Divisor& d, std::size_t steps, std::mt19937_64& rng) {
    const auto n = g.vertex_count();
    if (n < 2) return d;
    const std::uint32_t full = (1u << n) - 1;
    std::uniform_int_distribution<std::uint32_t> pick(1, full - 1);
    Divisor cur = d;
    for (std::size_t s = 0; s < steps; ++s)
        for (int attempt = 0; attempt < 64; ++attempt) {
            const auto mask = pick(rng);
            if (oracle_fireable(g, cur, mask)) {
                cur = oracle_fire(g, cur, mask);
                break;
            }
        }
    return cur;
}

HarmonicFixture random_harmonic(std::size_t tree_vertices, std::int64_t degree, std::mt19937_64& rng) {
    auto coin = [&] { return std::bernoulli_distribution(0.5)(rng); };
    auto composition = [&](std::int64_t total) {
        std::vector<std::int64_t> parts{1};
        for (std::int64_t i = 1; i < total; ++i) {
            if (coin())
                parts.push_back(1);
            else
                ++parts.back();
        }
        return parts;
    };
    for (;;) {
        HarmonicFixture fx;
        fx.tree = random_tree(tree_vertices, rng);
        fx.degree = degree;
        std::vector<std::vector<VertexId>> fibre(tree_vertices);
        std::vector<std::int64_t> mult;
        for (VertexId w = 0; w < tree_vertices; ++w)
            for (auto m : composition(degree)) {
                fibre[w].push_back(static_cast<VertexId>(mult.size()));
                fx.morphism.vertex_map.push_back(w);
                mult.push_back(m);
            }
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (EdgeId te = 0; te < fx.tree.edge_count(); ++te) {
            const auto& e = fx.tree.edge(te);
            std::vector<std::int64_t> rows, cols;
            for (auto v : fibre[e.u]) rows.push_back(mult[v]);
            for (auto v : fibre[e.v]) cols.push_back(mult[v]);
            std::int64_t left = degree;
            while (left > 0) {
                std::vector<std::size_t> ri, ci;
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (rows[i]) ri.push_back(i);
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (cols[j]) ci.push_back(j);
                const auto i = ri[std::uniform_int_distribution<std::size_t>(0, ri.size() - 1)(rng)];
                const auto j = ci[std::uniform_int_distribution<std::size_t>(0, ci.size() - 1)(rng)];
                const auto amount = std::uniform_int_distribution<std::int64_t>(1, std::min(rows[i], cols[j]))(rng);
                rows[i] -= amount;
                cols[j] -= amount;
                left -= amount;
                for (auto r : composition(amount)) {
                    edges.emplace_back(fibre[e.u][i], fibre[e.v][j]);
                    fx.morphism.edge_map.push_back(te);
                    fx.morphism.index.push_back(r);
                }
            }
        }
        fx.graph = MultiGraph(mult.size(), edges);
        if (is_connected(fx.graph)) return fx;
    }
}

Refinement random_refinement(const MultiGraph& g, std::size_t max_subdivisions, std::size_t max_leaves, std::mt19937_64& rng) {
    Refinement out;
    out.map.original_vertex_count = g.vertex_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.map.roles.push_back(OriginalVertex{v});
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        const auto s = std::uniform_int_distribution<std::size_t>(0, max_subdivisions)(rng);
        const bool flip = std::bernoulli_distribution(0.5)(rng);
        const VertexId from = flip ? edge.v : edge.u, to = flip ? edge.u : edge.v;
        VertexId prev = from;
        for (std::size_t i = 1; i <= s; ++i) {
            const auto x = static_cast<VertexId>(out.map.roles.size());
            out.map.roles.push_back(SubdivisionVertex{e, from, to, i});
            edges.emplace_back(prev, x);
            prev = x;
        }
        edges.emplace_back(prev, to);
    }
    const auto leaves = std::uniform_int_distribution<std::size_t>(0, max_leaves)(rng);
    for (std::size_t i = 0; i < leaves; ++i) {
        const auto x = static_cast<VertexId>(out.map.roles.size());
        const auto anchor = std::uniform_int_distribution<VertexId>(0, x - 1)(rng);
        out.map.roles.push_back(AddedLeaf{anchor});
        edges.emplace_back(anchor, x);
    }
    out.refined = MultiGraph(out.map.roles.size(), edges);
    return out;
}

bool oracle_fireable(const MultiGraph& g, const Divisor& d, std::uint32_t mask) {
    std::vector<std::int64_t> out(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        const bool in_u = mask >> e.u & 1, in_v = mask >> e.v & 1;
        if (in_u && !in_v) ++out[e.u];
        if (in_v && !in_u) ++out[e.v];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v & 1) && out[v] > d[v]) return false;
    return true;
}

MaximalFireable oracle_max_fireable(const MultiGraph& g, const Divisor& d, VertexId q) {
    const auto n = g.vertex_count();
    std::vector<std::uint32_t> fireable;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (!(mask >> q & 1) && oracle_fireable(g, d, mask)) fireable.push_back(mask);
    MaximalFireable best;
    for (auto m : fireable)
        if (std::popcount(m) > std::popcount(best.mask)) best.mask = m;
    for (auto m : fireable)
        if ((m & ~best.mask) != 0) best.contains_all = false;
    return best;
}

std::optional<std::vector<std::int64_t>> oracle_script(const MultiGraph& g, const Divisor& d1, const Divisor& d2) {
    using boost::multiprecision::cpp_rational;
    const auto n = g.vertex_count();
    std::int64_t deg1 = 0, deg2 = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg1 += d1[v];
        deg2 += d2[v];
    }
    if (deg1 != deg2) return std::nullopt;
    if (n == 1) return std::vector<std::int64_t>{0};
    // Reduced system on vertices 1..n-1: Q' y = (d1 - d2)'.
    const auto m = n - 1;
    std::vector<std::vector<cpp_rational>> a(m, std::vector<cpp_rational>(m + 1, 0));
    for (const auto& e : g.edges()) {
        for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (x == 0) continue;
            a[x - 1][x - 1] += 1;
            if (y != 0) a[x - 1][y - 1] -= 1;
        }
    }
    for (VertexId v = 1; v < n; ++v) a[v - 1][m] = d1[v] - d2[v];
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) throw std::logic_error("oracle_script: singular reduced Laplacian (graph disconnected?)");
        std::swap(a[pivot], a[col]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const cpp_rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<std::int64_t> x(n, 0);
    for (std::size_t r = 0; r < m; ++r) {
        const cpp_rational val = a[r][m] / a[r][r];
        if (denominator(val) != 1) return std::nullopt;
        x[r + 1] = static_cast<std::int64_t>(numerator(val));
    }
    const auto lo = *std::min_element(x.begin(), x.end());
    for (auto& v : x) v -= lo;
    return x;
}

bool oracle_positive_rank(const MultiGraph& g, const Divisor& d) {
    const auto n = g.vertex_count();
    const std::uint32_t full = (1u << n) - 1;
    std::set<std::vector<std::int64_t>> seen;
    std::queue<Divisor> todo;
    std::uint32_t covered = 0;
    auto visit = [&](const Divisor& x) {
        std::vector<std::int64_t> key(x.chips().begin(), x.chips().end());
        if (!seen.insert(key).second) return;
        for (VertexId v = 0; v < n; ++v)
            if (x[v] > 0) covered |= 1u << v;
        todo.push(x);
    };
    visit(d);
    while (!todo.empty() && covered != full) {
        const auto cur = todo.front();
        todo.pop();
        for (std::uint32_t mask = 1; mask < full; ++mask)
            if (oracle_fireable(g, cur, mask)) visit(oracle_fire(g, cur, mask));
    }
    return covered == full;
}

long oracle_treewidth(const MultiGraph& g) {
    const auto n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long best = static_cast<long>(n) - 1;
    do {
        auto a = adj;
        std::uint32_t alive = (1u << n) - 1;
        long width = 0;
        for (auto v : perm) {
            const auto nb = a[v] & alive & ~(1u << v);
            width = std::max(width, static_cast<long>(std::popcount(nb)));
            if (width >= best) break;
            for (std::uint32_t m = nb; m; m &= m - 1) a[std::countr_zero(m)] |= nb & ~(1u << std::countr_zero(m));
            alive &= ~(1u << v);
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace testing
