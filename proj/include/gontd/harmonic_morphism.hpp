#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gontd/graph.hpp"
#include "gontd/report.hpp"
#include "gontd/tree_decomposition.hpp"

namespace gontd {

/// Incidence-preserving map from G to a tree T with a positive index per edge of G.
struct FiniteMorphism {
    std::vector<VertexId> vertex_map;  // V(G) -> V(T)
    std::vector<EdgeId> edge_map;      // E(G) -> E(T)
    std::vector<std::int64_t> index;   // r_f(e) >= 1 per edge of G
};

struct HarmonicCertificate {
    std::vector<std::int64_t> m;  // m_f(v) per vertex of G
    std::int64_t degree = 0;      // deg(f)
};

struct HarmonicResult {
    std::optional<HarmonicCertificate> certificate;
    ValidationReport status;  // located violation when not harmonic
};

/// Work counters of morphism_to_treedec.
struct MorphismTdStats {
    std::size_t bag_insertions = 0;
};

bool is_tree(const MultiGraph& t);

/// Incidence preservation, index positivity, and shape checks.
ValidationReport check_morphism(const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f);

/// Computes m_f and deg(f), or reports where harmonicity or a degree identity fails.
HarmonicResult harmonic_certificate(const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f);

/// Width-≤deg(f) decomposition of G obtained by subdividing every tree edge
/// once per preimage edge. Tree vertex bags are fibres; the r-th subdivision
/// bag of edge {i,j} holds v_r..v_k' and w_1..w_r, where the fibre edges
/// {v_s, w_s} are ordered by (v, w, edge id), and i is the endpoint nearer to
/// tree vertex 0. Node ids follow a preorder walk of the subdivided tree from
/// tree vertex 0.
TreeDecomposition morphism_to_treedec(const MultiGraph& g, const MultiGraph& t, const FiniteMorphism& f,
                                      MorphismTdStats* stats = nullptr);

/// morphism_to_treedec on a refinement followed by contraction back to the original graph.
TreeDecomposition stable_treedec(const MultiGraph& original, const MultiGraph& refined, const RefinementMap& map,
                                 const MultiGraph& t, const FiniteMorphism& f, MorphismTdStats* stats = nullptr);

}  // namespace gontd
