#include "gontd/divisor.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gontd/errors.hpp"

namespace gontd {

namespace {

void require_shape(const MultiGraph& g, const Divisor& d, const char* op) {
    if (d.size() != g.vertex_count())
        throw DomainError(std::string(op) + ": divisor has " + std::to_string(d.size()) + " entries, graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
}

void require_effective(const MultiGraph& g, const Divisor& d, const char* op) {
    require_shape(g, d, op);
    for (VertexId v = 0; v < d.size(); ++v)
        if (d[v] < 0)
            throw DomainError(std::string(op) + ": divisor is not effective (vertex " + g.name(v) + " has " +
                              std::to_string(d[v]) + " chips)");
}

void require_vertex(const MultiGraph& g, VertexId q, const char* op) {
    if (q >= g.vertex_count()) throw DomainError(std::string(op) + ": vertex out of range");
}

}  // namespace

Divisor Divisor::point(std::size_t n, VertexId v, std::int64_t k) {
    Divisor d(n);
    d[v] = k;
    return d;
}

bool Divisor::is_effective() const noexcept {
    return std::all_of(chips_.begin(), chips_.end(), [](std::int64_t c) { return c >= 0; });
}

VertexSet Divisor::support() const {
    VertexSet s(chips_.size());
    for (VertexId v = 0; v < chips_.size(); ++v)
        if (chips_[v] != 0) s.insert(v);
    return s;
}

std::int64_t FiringScript::max() const noexcept {
    return x.empty() ? 0 : *std::max_element(x.begin(), x.end());
}

FiringScript normalize_script(std::vector<std::int64_t> x) {
    if (!x.empty()) {
        const auto lo = *std::min_element(x.begin(), x.end());
        for (auto& v : x) v = checked_sub(v, lo);
    }
    return {std::move(x)};
}

std::int64_t degree(const Divisor& d) {
    std::int64_t total = 0;
    for (auto c : d.chips()) total = checked_add(total, c);
    return total;
}

bool is_fireable(const MultiGraph& g, const Divisor& d, const VertexSet& u) {
    require_effective(g, d, "is_fireable");
    for (VertexId v : u)
        if (outdeg(g, u, v) > d[v]) return false;
    return true;
}

Divisor fire_set(const MultiGraph& g, const Divisor& d, const VertexSet& u) {
    require_effective(g, d, "fire_set");
    Divisor out = d;
    for (VertexId v : u) {
        const auto out_edges = outdeg(g, u, v);
        if (out_edges > d[v])
            throw DomainError("fire_set: vertex " + g.name(v) + " has " + std::to_string(d[v]) + " chips but " +
                              std::to_string(out_edges) + " edges leave the set");
        for (const auto& nb : g.neighbors(v)) {
            if (u.contains(nb.vertex)) continue;
            out[v] = checked_sub(out[v], nb.multiplicity);
            out[nb.vertex] = checked_add(out[nb.vertex], nb.multiplicity);
        }
    }
    return out;
}

Divisor apply_script(const MultiGraph& g, const Divisor& d, std::span<const std::int64_t> x) {
    require_shape(g, d, "apply_script");
    if (x.size() != g.vertex_count()) throw DomainError("apply_script: script length mismatch");
    Divisor out = d;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::int64_t qx = checked_mul(g.degree(v), x[v]);
        for (const auto& nb : g.neighbors(v)) qx = checked_sub(qx, checked_mul(nb.multiplicity, x[nb.vertex]));
        out[v] = checked_sub(out[v], qx);
    }
    return out;
}

VertexSet dhar(const MultiGraph& g, const Divisor& d, VertexId q) {
    require_effective(g, d, "dhar");
    require_vertex(g, q, "dhar");
    const auto n = g.vertex_count();

    // out[v] tracks outdeg_U(v) for the current unburnt set U.
    std::vector<std::int64_t> out(n, 0);
    std::vector<char> burnt(n, 0), queued(n, 0);
    std::deque<VertexId> fire_front;

    burnt[q] = queued[q] = 1;
    for (const auto& nb : g.neighbors(q)) out[nb.vertex] += nb.multiplicity;
    for (VertexId v = 0; v < n; ++v) {
        if (!queued[v] && out[v] > d[v]) {
            queued[v] = 1;
            fire_front.push_back(v);
        }
    }
    while (!fire_front.empty()) {
        const VertexId v = fire_front.front();
        fire_front.pop_front();
        burnt[v] = 1;
        for (const auto& nb : g.neighbors(v)) {
            const VertexId w = nb.vertex;
            if (burnt[w]) continue;
            out[w] += nb.multiplicity;
            if (!queued[w] && out[w] > d[w]) {
                queued[w] = 1;
                fire_front.push_back(w);
            }
        }
    }

    VertexSet u(n);
    for (VertexId v = 0; v < n; ++v)
        if (!burnt[v]) u.insert(v);
    return u;
}

ReducedDivisor q_reduce(const MultiGraph& g, const Divisor& d, VertexId q, const ReduceObserver& observer) {
    require_effective(g, d, "q_reduce");
    require_vertex(g, q, "q_reduce");
    if (!is_connected(g)) throw DomainError("q_reduce: graph is not connected");

    const auto n = g.vertex_count();
    const std::int64_t bound = checked_mul(degree(d), static_cast<std::int64_t>(n));
    ReducedDivisor result{d, {std::vector<std::int64_t>(n, 0)}};
    for (std::int64_t iter = 0;; ++iter) {
        VertexSet u = dhar(g, result.divisor, q);
        if (u.empty()) break;
        if (iter >= bound)
            throw InternalError("q_reduce exceeded deg(D)*|V| = " + std::to_string(bound) + " iterations");
        result.divisor = fire_set(g, result.divisor, u);
        for (VertexId v : u) ++result.script.x[v];
        if (observer) observer(result.divisor, u);
    }
    return result;
}

std::optional<FiringScript> script_between(const MultiGraph& g, const Divisor& d1, const Divisor& d2) {
    require_effective(g, d1, "script_between");
    require_effective(g, d2, "script_between");
    if (degree(d1) != degree(d2)) return std::nullopt;
    const VertexId q = 0;
    auto r1 = q_reduce(g, d1, q);
    auto r2 = q_reduce(g, d2, q);
    if (r1.divisor != r2.divisor) return std::nullopt;
    // d1 - Q x1 = d2 - Q x2, so d2 = d1 - Q (x1 - x2).
    std::vector<std::int64_t> x(g.vertex_count());
    for (VertexId v = 0; v < x.size(); ++v) x[v] = checked_sub(r1.script.x[v], r2.script.x[v]);
    return normalize_script(std::move(x));
}

std::optional<std::int64_t> dist(const MultiGraph& g, const Divisor& d1, const Divisor& d2) {
    auto x = script_between(g, d1, d2);
    if (!x) return std::nullopt;
    return x->max();
}

LevelSetChain level_set_chain(const FiringScript& x) {
    if (x.x.empty() || *std::min_element(x.x.begin(), x.x.end()) != 0)
        throw DomainError("level_set_chain: script is not normalized");
    const auto t = x.max();
    if (t == 0) throw DomainError("level_set_chain: zero script has no chain");
    const auto n = x.x.size();
    LevelSetChain chain;
    chain.sets.reserve(static_cast<std::size_t>(t));
    for (std::int64_t i = 1; i <= t; ++i) {
        VertexSet u(n);
        for (VertexId v = 0; v < n; ++v)
            if (x.x[v] >= t + 1 - i) u.insert(v);
        chain.sets.push_back(std::move(u));
    }
    return chain;
}

}  // namespace gontd
