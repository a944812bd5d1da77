#include "gontd/search_strategy.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gontd/errors.hpp"
#include "gontd/gonality.hpp"

namespace gontd {

std::size_t MssTree::add_root(Position p) {
    nodes.clear();
    nodes.push_back({std::move(p), std::nullopt, {}, Move::Root, Step::None});
    root = 0;
    return 0;
}

std::size_t MssTree::add_child(std::size_t parent, Position p, Move move, Step step) {
    const std::size_t id = nodes.size();
    nodes.at(parent).children.push_back(id);
    nodes.push_back({std::move(p), parent, {}, move, step});
    return id;
}

std::size_t MssTree::max_searchers() const {
    std::size_t k = 0;
    for (const auto& node : nodes) k = std::max(k, node.position.x.size());
    return k;
}

std::size_t position_potential(const Position& p) {
    return p.r.size() * (p.x.size() + p.r.size());
}

namespace {

bool is_single_flap(const MultiGraph& g, const VertexSet& x, const VertexSet& r) {
    if (r.empty() || r.intersects(x)) return false;
    for (const auto& f : flaps(g, x))
        if (f.contains(r.front())) return f == r;
    return false;
}

}  // namespace

GoodFiring good_firing_set(const MultiGraph& g, const Divisor& d, const VertexSet& x, const VertexSet& r) {
    if (d.size() != g.vertex_count() || !d.is_effective())
        throw DomainError("good_firing_set: divisor must be effective on the graph");
    if (!is_single_flap(g, x, r)) throw DomainError("good_firing_set: r is not a single x-flap");
    const VertexSet supp = d.support();
    if (!x.is_subset_of(supp)) throw DomainError("good_firing_set: x is not covered by the divisor's support");
    if (r.intersects(supp)) throw DomainError("good_firing_set: divisor has chips inside r");

    const VertexId q = r.front();
    const std::int64_t bound = checked_mul(degree(d), static_cast<std::int64_t>(g.vertex_count()));
    GoodFiring out{d, VertexSet(g.vertex_count()), {}};
    for (std::int64_t iter = 0; iter <= bound; ++iter) {
        VertexSet u = dhar(g, out.divisor, q);
        if (u.empty())
            throw DomainError("good_firing_set: divisor is " + g.name(q) + "-reduced with no chip on " +
                              g.name(q) + "; it does not have positive rank");
        if (u.intersects(r)) throw InternalError("good_firing_set: Dhar set meets the flap");
        if (u.intersects(x)) {
            out.fired = std::move(u);
            return out;
        }
        // U lies in other flaps, which are not adjacent to r: r stays chip-free.
        out.divisor = fire_set(g, out.divisor, u);
        out.preparatory.push_back(std::move(u));
    }
    throw InternalError("good_firing_set exceeded deg(D)*|V| = " + std::to_string(bound) + " iterations");
}

MssTree build_mss(const MultiGraph& g, const Divisor& d, const BuildObserver& observer) {
    if (!is_connected(g)) throw DomainError("build_mss: graph is not connected");
    if (d.size() != g.vertex_count()) throw DomainError("build_mss: divisor length mismatch");
    if (!d.is_effective()) throw DomainError("build_mss: divisor is not effective");
    if (!has_positive_rank(g, d)) throw DomainError("build_mss: divisor does not have positive rank");

    const auto n = g.vertex_count();
    const auto k = static_cast<std::size_t>(degree(d));

    struct Pending {
        std::size_t node;
        Divisor divisor;
    };
    std::deque<Pending> pending;

    MssTree t;
    t.add_root({g.empty_set(), g.all_vertices()});
    auto enqueue = [&](std::size_t node, const Divisor& div) {
        const auto& pos = t.nodes[node].position;
        if (pos.r.empty()) return;
        if (observer.on_pending_leaf) observer.on_pending_leaf(node, {pos, div});
        pending.push_back({node, div});
    };

    const VertexSet supp = d.support();
    enqueue(t.add_child(t.root, {supp, supp.complement()}, Move::Grow, Step::Init), d);

    std::size_t iterations = 0;
    while (!pending.empty()) {
        if (++iterations > n * n) throw InternalError("build_mss: leaf loop exceeded n^2 iterations");
        Pending leaf = std::move(pending.front());
        pending.pop_front();
        const Position pos = t.nodes[leaf.node].position;
        const VertexSet& x = pos.x;
        const VertexSet& r = pos.r;

        // Step I: R consists of several X-flaps.
        std::vector<VertexSet> parts;
        for (auto& f : flaps(g, x))
            if (f.is_subset_of(r)) parts.push_back(std::move(f));
        if (parts.size() >= 2) {
            for (auto& part : parts) enqueue(t.add_child(leaf.node, {x, std::move(part)}, Move::Split, Step::I), leaf.divisor);
            continue;
        }

        // Step II: searchers off the boundary of R are released.
        VertexSet boundary = neighborhood(g, r);
        if (boundary.is_proper_subset_of(x)) {
            enqueue(t.add_child(leaf.node, {std::move(boundary), r}, Move::Shrink, Step::II), leaf.divisor);
            continue;
        }

        // Step III: fire a good set and walk searchers from its boundary vertices into R.
        GoodFiring gf = good_firing_set(g, leaf.divisor, x, r);
        if (observer.on_fire) {
            Divisor cur = leaf.divisor;
            for (const auto& u : gf.preparatory) {
                Divisor next = fire_set(g, cur, u);
                observer.on_fire({leaf.node, pos, cur, u, next, true});
                cur = std::move(next);
            }
        }
        const Divisor fired = fire_set(g, gf.divisor, gf.fired);
        if (observer.on_fire) observer.on_fire({leaf.node, pos, gf.divisor, gf.fired, fired, false});

        std::size_t prev = leaf.node;
        Position cur = pos;
        for (VertexId s : gf.fired & x) {
            const VertexSet entering = neighbors_in(g, s, r);
            if (gf.divisor[s] < static_cast<std::int64_t>(entering.size()))
                throw InternalError("build_mss: searcher vertex " + g.name(s) + " has fewer chips than neighbours in R");
            Position grown{cur.x | entering, r - (cur.x | entering)};
            if (grown.x.size() > k + 1) throw InternalError("build_mss: grow position exceeds k+1 searchers");
            if (grown != cur) {
                prev = t.add_child(prev, grown, Move::Grow, Step::III);
                cur = std::move(grown);
            }
            cur.x.erase(s);
            if (cur.x.size() > k) throw InternalError("build_mss: shrink position exceeds k searchers");
            prev = t.add_child(prev, cur, Move::Shrink, Step::III);
        }
        enqueue(prev, fired);
    }
    return t;
}

ValidationReport validate_mss(const MultiGraph& g, const MssTree& t, std::size_t k) {
    using R = ValidationReport;
    const auto n = g.vertex_count();
    const auto count = t.nodes.size();
    if (count == 0) return R::failure("empty strategy tree");
    if (t.root >= count) return R::failure("root index out of range");

    for (std::size_t i = 0; i < count; ++i) {
        const auto& p = t.nodes[i].position;
        if (p.x.universe() != n || p.r.universe() != n)
            return R::failure("node " + std::to_string(i) + ": vertex set over the wrong universe", i);
    }

    // Tree shape: parent/child links agree and everything hangs off the root.
    const auto& root = t.nodes[t.root];
    if (root.parent) return R::failure("root has a parent", t.root);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& node = t.nodes[i];
        if (i != t.root) {
            if (!node.parent || *node.parent >= count) return R::failure("node " + std::to_string(i) + " has no valid parent", i);
            const auto& siblings = t.nodes[*node.parent].children;
            if (std::count(siblings.begin(), siblings.end(), i) != 1)
                return R::failure("node " + std::to_string(i) + " is not listed by its parent", i);
        }
        for (auto c : node.children)
            if (c >= count || t.nodes[c].parent != i) return R::failure("node " + std::to_string(i) + " lists a foreign child", i);
    }
    std::vector<char> seen(count, 0);
    std::vector<std::size_t> stack{t.root};
    std::size_t reached = 0;
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        if (seen[i]) return R::failure("strategy graph has a cycle", i);
        seen[i] = 1;
        ++reached;
        for (auto c : t.nodes[i].children) stack.push_back(c);
    }
    if (reached != count) return R::failure("strategy tree is not connected to the root");

    if (!root.position.x.empty() || root.position.r != g.all_vertices())
        return R::failure("root is not (∅, V)", t.root);

    for (std::size_t i = 0; i < count; ++i) {
        const auto& node = t.nodes[i];
        const auto& [x, r] = node.position;
        const std::string at = "node " + std::to_string(i) + " (" + format_position(g, node.position) + ")";
        if (x.intersects(r)) return R::failure(at + ": searchers inside the fugitive territory", i);
        if (x.size() > k) return R::failure(at + ": more than " + std::to_string(k) + " searchers", i);
        const auto fl = flaps(g, x);
        for (const auto& f : fl)
            if (f.intersects(r) && !f.is_subset_of(r)) return R::failure(at + ": R is not a union of X-flaps", i);

        if (t.is_leaf(i)) {
            if (!r.empty()) return R::failure(at + ": incomplete leaf", i);
            continue;
        }
        if (node.children.empty()) {
            if (n == 0) continue;
            return R::failure(at + ": root has no children", i);
        }

        std::optional<Move> expected;
        if (node.children.size() == 1) {
            const auto& [cx, cr] = t.nodes[node.children[0]].position;
            if (cx.is_proper_subset_of(x) && cr == r)
                expected = Move::Shrink;
            else if (!r.empty() && x.is_proper_subset_of(cx) && cx.is_subset_of(x | r) && cr == r - cx)
                expected = Move::Grow;
            else
                return R::failure(at + ": single child is neither a shrink nor a grow move", i);
        } else {
            if (r.empty()) return R::failure(at + ": captured position branches", i);
            std::vector<VertexSet> want;
            for (const auto& f : fl)
                if (f.is_subset_of(r)) want.push_back(f);
            std::vector<VertexSet> got;
            for (auto c : node.children) {
                const auto& cp = t.nodes[c].position;
                if (cp.x != x) return R::failure(at + ": split child moves searchers", i);
                got.push_back(cp.r);
            }
            std::sort(got.begin(), got.end());
            if (got != want) return R::failure(at + ": split children are not exactly the X-flaps of R", i);
            expected = Move::Split;
        }
        for (auto c : node.children)
            if (t.nodes[c].move != *expected)
                return R::failure("node " + std::to_string(c) + ": move tag " + to_string(t.nodes[c].move) +
                                      " does not match the " + to_string(*expected) + " move it makes",
                                  c);
    }

    if (count > n * n + 1)
        return R::failure("strategy has " + std::to_string(count) + " nodes, more than n^2+1 = " + std::to_string(n * n + 1));
    return R::success();
}

std::string format_set(const MultiGraph& g, const VertexSet& s) {
    if (s.empty()) return "∅";
    const bool compact = g.has_labels() && std::all_of(g.labels().begin(), g.labels().end(),
                                                       [](const std::string& l) { return l.size() == 1; });
    std::string out;
    for (VertexId v : s) {
        if (!compact && !out.empty()) out += ',';
        out += g.name(v);
    }
    return out;
}

std::string format_position(const MultiGraph& g, const Position& p) {
    return format_set(g, p.x) + " | " + format_set(g, p.r);
}

std::string format_divisor_sum(const MultiGraph& g, const Divisor& d) {
    std::string out;
    for (VertexId v = 0; v < d.size(); ++v) {
        const auto c = d[v];
        if (c == 0) continue;
        if (c > 0 && !out.empty()) out += '+';
        if (c == -1)
            out += '-';
        else if (c != 1)
            out += std::to_string(c);
        out += g.name(v);
    }
    return out.empty() ? "0" : out;
}

std::string to_string(Move m) {
    switch (m) {
        case Move::Root: return "root";
        case Move::Shrink: return "shrink";
        case Move::Grow: return "grow";
        case Move::Split: return "split";
    }
    return "?";
}

std::string to_string(Step s) {
    switch (s) {
        case Step::None: return "";
        case Step::Init: return "init";
        case Step::I: return "I";
        case Step::II: return "II";
        case Step::III: return "III";
    }
    return "?";
}

std::string mss_to_dot(const MultiGraph& g, const MssTree& t) {
    std::ostringstream os;
    os << "digraph mss {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << format_position(g, t.nodes[i].position) << "\"];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        for (auto c : t.nodes[i].children) {
            const auto& child = t.nodes[c];
            const std::string label = child.step == Step::None ? to_string(child.move) : to_string(child.step);
            os << "  n" << i << " -> n" << c << " [label=\"" << label << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace gontd
