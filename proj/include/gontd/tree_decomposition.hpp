#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gontd/graph.hpp"
#include "gontd/report.hpp"
#include "gontd/search_strategy.hpp"

namespace gontd {

/// Bags on the nodes of an undirected tree.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Largest bag size minus one; -1 for an empty decomposition.
    long width() const;
    bool operator==(const TreeDecomposition&) const = default;
};

struct TreeDecReport {
    ValidationReport status;
    long width = -1;

    explicit operator bool() const noexcept { return status.ok; }
};

/// Checks tree shape and the cover, edge and connectivity conditions.
TreeDecReport validate_treedec(const MultiGraph& g, const TreeDecomposition& td);

/// Bag X at every position (X, R) of a valid strategy; node ids follow a
/// preorder walk of the strategy tree. Throws DomainError for an invalid strategy.
TreeDecomposition mss_to_treedec(const MultiGraph& g, const MssTree& t);

/// Contracts tree edges whose endpoint bags are equal. Optional cosmetic pass.
TreeDecomposition merge_equal_adjacent_bags(const TreeDecomposition& td);

/// Default vertex cap for treewidth_bruteforce; GONTD_TW_MAX_VERTICES overrides it.
inline constexpr std::size_t kDefaultTreewidthVertexCap = 10;

/// Exact treewidth by dynamic programming over elimination-ordering prefixes
/// (vertex subsets). nullopt when the treewidth exceeds max_width. Throws
/// ResourceError above the vertex cap.
std::optional<long> treewidth_bruteforce(const MultiGraph& g, long max_width,
                                         std::optional<std::size_t> vertex_cap = std::nullopt);

struct ExactTreewidth {
    long width = -1;
    std::vector<VertexId> order;  // an elimination order achieving `width`
};

/// Exact treewidth with an optimal elimination order. Same cap as treewidth_bruteforce.
ExactTreewidth exact_treewidth(const MultiGraph& g, std::optional<std::size_t> vertex_cap = std::nullopt);

/// Decomposition from eliminating vertices in the given order; width equals
/// the largest neighbourhood met during elimination.
TreeDecomposition treedec_from_elimination_order(const MultiGraph& g, const std::vector<VertexId>& order);

/// Role of one vertex of a refined graph relative to the original graph.
struct OriginalVertex {
    VertexId vertex;
};
struct SubdivisionVertex {
    EdgeId edge;        // edge of the original graph
    VertexId from;      // endpoint the position is counted from (replacement target)
    VertexId to;
    std::size_t position;  // 1-based along the path from `from` to `to`
};
struct AddedLeaf {
    VertexId anchor;  // vertex of the refined graph the leaf hangs from
};
using RefinementRole = std::variant<OriginalVertex, SubdivisionVertex, AddedLeaf>;

/// Per-vertex classification of a refinement (subdivisions and added leaves).
struct RefinementMap {
    std::size_t original_vertex_count = 0;
    std::vector<RefinementRole> roles;  // indexed by refined-graph vertex

    static RefinementMap identity(std::size_t n);
};

/// Checks that `refined` really is the described refinement of `original`.
ValidationReport validate_refinement(const MultiGraph& original, const MultiGraph& refined, const RefinementMap& map);

/// Decomposition of the original graph: subdivision vertices are replaced by
/// their `from` endpoint and added leaves are dropped from every bag.
TreeDecomposition contract_refinement(const TreeDecomposition& td, const RefinementMap& map);

}  // namespace gontd
