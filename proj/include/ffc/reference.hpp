#pragma once

// Serial brute-force counterparts of the map-space kernels. Every map is
// materialized and its gcd recomputed from scratch with ff_gcd(); no pruning,
// no incremental state. Kept for testing and benchmarking only.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ffc/decide.hpp"
#include "ffc/ffset.hpp"

namespace ffc::reference {

/// Calls visit(assignment) for every map in lexicographic order.
void for_each_map(const MultiDigraph& g, const MultiDigraph& h,
                  const std::function<void(const std::vector<EdgeIndex>&)>& visit);

FFSet ff_set_of_graphs(const MultiDigraph& g, const MultiDigraph& h);
std::uint64_t count_ff_maps(const MultiDigraph& g, const MultiDigraph& h, Modulus m);
std::optional<std::vector<EdgeIndex>> first_ff_map(const MultiDigraph& g, const MultiDigraph& h, Modulus m);
/// Maps for which (n | g) differs from (g == 0) for some n in moduli.
std::uint64_t equivalence_violations(const MultiDigraph& g, const MultiDigraph& h,
                                     std::span<const std::uint64_t> moduli);

}  // namespace ffc::reference
