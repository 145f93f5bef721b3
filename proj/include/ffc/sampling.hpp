#pragma once

#include <cstdint>
#include <random>

#include "ffc/decide.hpp"
#include "ffc/graph.hpp"

namespace ffc {

/// Uniform edge endpoints over [1, max_vertices] vertices; loops and parallel
/// edges allowed. Edge count uniform in [min_edges, max_edges].
MultiDigraph random_digraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t min_edges,
                            std::size_t max_edges);

/// Uniform random map; target must have edges unless source has none.
EdgeMap random_edge_map(std::mt19937_64& rng, const MultiDigraph& source, const MultiDigraph& target);

}  // namespace ffc
