#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gontd/divisor.hpp"
#include "gontd/report.hpp"

namespace gontd {

/// Searchers on x, fugitive confined to r (a union of x-flaps).
struct Position {
    VertexSet x;
    VertexSet r;
    bool operator==(const Position&) const = default;
};

/// How a node was reached from its parent.
enum class Move { Root, Shrink, Grow, Split };

/// Which construction step emitted a node (None for hand-built trees).
enum class Step { None, Init, I, II, III };

struct MssNode {
    Position position;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
    Move move = Move::Root;
    Step step = Step::None;
};

/// Rooted position tree of a (possibly partial) monotone search strategy.
struct MssTree {
    std::vector<MssNode> nodes;
    std::size_t root = 0;

    std::size_t add_root(Position p);
    std::size_t add_child(std::size_t parent, Position p, Move move, Step step = Step::None);

    bool is_leaf(std::size_t i) const { return i != root && nodes.at(i).children.empty(); }
    std::size_t size() const noexcept { return nodes.size(); }
    std::size_t max_searchers() const;
};

struct AnnotatedLeaf {
    Position position;
    Divisor divisor;
};

struct GoodFiring {
    Divisor divisor;  // D'' ~ D with x ⊆ supp(D''), r ∩ supp(D'') = ∅
    VertexSet fired;  // U: fireable from D'', U ∩ r = ∅, U ∩ x ≠ ∅
    std::vector<VertexSet> preparatory;  // sets fired on the way from D to D''
};

struct FiringEvent {
    std::size_t node;  // node (X,R) being expanded
    Position position;
    Divisor before;
    VertexSet fired;
    Divisor after;
    bool preparatory = false;  // true for a firing that only moves chips off the flap's boundary
};

struct BuildObserver {
    std::function<void(const FiringEvent&)> on_fire;
    /// Called each time a leaf with R ≠ ∅ is queued with its divisor.
    std::function<void(std::size_t node, const AnnotatedLeaf&)> on_pending_leaf;
};

/// Finds D'' ~ d and a fireable U avoiding r and meeting x. Requires r to be a
/// single x-flap, d effective, x ⊆ supp(d), r ∩ supp(d) = ∅, and d of positive
/// rank. Dhar's algorithm is run from the smallest vertex of r.
GoodFiring good_firing_set(const MultiGraph& g, const Divisor& d, const VertexSet& x, const VertexSet& r);

/// Monotone search strategy for deg(d)+1 searchers built from a positive-rank
/// effective divisor. Leaves are expanded FIFO; step I (split) takes
/// precedence over II (shrink) over III (fire).
MssTree build_mss(const MultiGraph& g, const Divisor& d, const BuildObserver& observer = {});

/// Checks every clause of the strategy definition for k searchers plus the
/// n²+1 size bound. A captured position (R = ∅) may still shrink to a single
/// child, as the construction's firing paths do.
ValidationReport validate_mss(const MultiGraph& g, const MssTree& t, std::size_t k);

/// f(X,R) = |R|(|X|+|R|), the potential bounding the number of descendants.
std::size_t position_potential(const Position& p);

/// Compact set rendering: "abc" when every label is one character, else "a,b,c"; "∅" when empty.
std::string format_set(const MultiGraph& g, const VertexSet& s);

/// "X | R" in the same compact style.
std::string format_position(const MultiGraph& g, const Position& p);

/// Formal-sum rendering such as "2b+g"; "0" for the zero divisor.
std::string format_divisor_sum(const MultiGraph& g, const Divisor& d);

std::string to_string(Move m);
std::string to_string(Step s);

/// Graphviz digraph, one box per position labelled "X | R", edges labelled by step.
std::string mss_to_dot(const MultiGraph& g, const MssTree& t);

}  // namespace gontd
