#pragma once

#include <cstddef>
#include <random>

#include "gontd/graph.hpp"

namespace gontd {

/// Connected multigraph on n vertices: a random recursive spanning tree plus
/// `extra_edges` random edges, never exceeding `max_multiplicity` between a pair.
/// Stops adding extra edges early if every pair is saturated.
MultiGraph random_connected_multigraph(std::size_t n, std::size_t extra_edges, std::int64_t max_multiplicity,
                                       std::mt19937_64& rng);

}  // namespace gontd
