#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gontd/vertex_set.hpp"

namespace gontd {

using EdgeId = std::uint32_t;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Finite loopless multigraph on vertices 0..n-1.
///
/// Every parallel edge keeps its own EdgeId (morphisms address individual
/// edges), while the per-vertex adjacency aggregates parallel edges into a
/// single (neighbour, multiplicity) entry so that degree and out-degree
/// queries touch each neighbour once. Immutable after construction.
class MultiGraph {
public:
    struct Edge {
        VertexId u;  // u < v
        VertexId v;
        bool operator==(const Edge&) const = default;
    };

    struct Neighbor {
        VertexId vertex;
        std::int64_t multiplicity;
    };

    MultiGraph() = default;

    /// Throws DomainError on a loop, an endpoint out of range, or duplicate labels.
    /// `labels` is either empty or has exactly n entries.
    MultiGraph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
               std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    /// Neighbours of v sorted by index, parallel edges folded into multiplicity.
    std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }

    std::int64_t degree(VertexId v) const { return degree_.at(v); }
    std::int64_t multiplicity(VertexId u, VertexId v) const;

    /// Edge ids incident to v, ascending.
    std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_.at(v); }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Display name: the label when present, otherwise the 1-based index.
    std::string name(VertexId v) const;

    /// Resolves a display name (label, or 1-based index for unlabeled graphs).
    std::optional<VertexId> find(const std::string& name) const;

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    bool operator==(const MultiGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::int64_t> degree_;
    std::vector<std::string> labels_;
};

/// Q[u][u] = deg(u), Q[u][v] = -(number of u-v edges).
IntMatrix laplacian(const MultiGraph& g);

/// Number of edges (with multiplicity) from v to V \ u. Requires v in u.
std::int64_t outdeg(const MultiGraph& g, const VertexSet& u, VertexId v);

/// Vertex sets of the components of G - x, ordered by smallest member.
std::vector<VertexSet> flaps(const MultiGraph& g, const VertexSet& x);

/// Vertices of r adjacent to v.
VertexSet neighbors_in(const MultiGraph& g, VertexId v, const VertexSet& r);

/// N(u): vertices outside u with a neighbour in u.
VertexSet neighborhood(const MultiGraph& g, const VertexSet& u);

/// True iff g has exactly one component. The empty graph is not connected.
bool is_connected(const MultiGraph& g);

/// Number of edges with exactly one endpoint in u.
std::int64_t boundary_size(const MultiGraph& g, const VertexSet& u);

}  // namespace gontd
