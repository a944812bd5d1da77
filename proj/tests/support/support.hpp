#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gontd/divisor.hpp"
#include "gontd/graph.hpp"
#include "gontd/harmonic_morphism.hpp"
#include "gontd/tree_decomposition.hpp"

namespace testing {

using namespace gontd;

std::string fixture_path(const std::string& name);

// The seven-vertex worked example with vertices a..g.
MultiGraph seven_vertex_example();
// C4 a-b-c-d-a, the path t0-t1-t2 and the fold a->t0, b,d->t1, c->t2 with all indices 1.
MultiGraph cycle4();
MultiGraph path3_tree();
FiniteMorphism cycle4_fold();

MultiGraph labeled(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);
MultiGraph path_graph(std::size_t n);
MultiGraph cycle_graph(std::size_t n);
MultiGraph banana_graph(std::size_t m);
MultiGraph star_graph(std::size_t leaves);
MultiGraph tree_from_pruefer(std::size_t n, const std::vector<VertexId>& code);
MultiGraph random_tree(std::size_t n, std::mt19937_64& rng);

Divisor divisor_of(const MultiGraph& g, const std::string& text);
VertexSet set_of(const MultiGraph& g, const std::string& names);

// Every connected simple graph with 1..max_n vertices, one per isomorphism class.
const std::vector<MultiGraph>& connected_simple_graphs(std::size_t max_n = 6);
// Seeded connected multigraphs, 2..max_n vertices, multiplicity <= max_mult.
std::vector<MultiGraph> random_multigraphs(std::size_t count, std::size_t max_n, std::int64_t max_mult, std::uint64_t seed);
// Every labeled tree on n vertices (Pruefer codes), n <= 7 is cheap.
std::vector<MultiGraph> all_labeled_trees(std::size_t n);

Divisor random_effective(std::size_t n, std::int64_t degree, std::mt19937_64& rng);
// Random walk in the equivalence class: fires random fireable sets.
Divisor random_equivalent(const MultiGraph& g, const Divisor& d, std::size_t steps, std::mt19937_64& rng);

struct HarmonicFixture {
    MultiGraph graph;
    MultiGraph tree;
    FiniteMorphism morphism;
    std::int64_t degree = 0;
};
// Harmonic morphism built by choosing fibre multiplicities per tree vertex and
// a random transportation plan per tree edge; retried until the graph is connected.
HarmonicFixture random_harmonic(std::size_t tree_vertices, std::int64_t degree, std::mt19937_64& rng);

struct Refinement {
    MultiGraph refined;
    RefinementMap map;
};
Refinement random_refinement(const MultiGraph& g, std::size_t max_subdivisions, std::size_t max_leaves, std::mt19937_64& rng);

// ---- independent oracles ----

// Fireability straight from the edge list.
bool oracle_fireable(const MultiGraph& g, const Divisor& d, std::uint32_t mask);
// Largest fireable subset of V \ {q} over all 2^(n-1) subsets, plus whether it
// contains every other fireable subset.
struct MaximalFireable {
    std::uint32_t mask = 0;
    bool contains_all = true;
};
MaximalFireable oracle_max_fireable(const MultiGraph& g, const Divisor& d, VertexId q);
// Exact rational solve of Q x = d1 - d2 with x_0 = 0; normalized x when integral.
std::optional<std::vector<std::int64_t>> oracle_script(const MultiGraph& g, const Divisor& d1, const Divisor& d2);
// Breadth-first closure of the effective divisors reachable by fireable set
// firings; positive rank iff every vertex is covered by some member.
bool oracle_positive_rank(const MultiGraph& g, const Divisor& d);
// Minimum elimination width over all vertex permutations.
long oracle_treewidth(const MultiGraph& g);

}  // namespace testing
