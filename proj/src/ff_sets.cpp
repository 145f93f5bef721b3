#include "ffc/ff_sets.hpp"

#include <algorithm>
#include <string>

#include "ffc/reference.hpp"

namespace ffc {

namespace {

void require_within(const kernels::MapSpace& space, std::uint64_t budget, const char* what) {
  if (space.map_count() > budget) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(space.target_edges()) + "^" +
                         std::to_string(space.source_edges()) + " maps exceed the budget of " +
                         std::to_string(budget));
  }
}

}  // namespace

FFSet ff_set_of_map(const EdgeMap& f) { return FFSet::from_gcd(ff_gcd(f)); }

FFSet ff_set_of_graphs(const MultiDigraph& g, const MultiDigraph& h, std::uint64_t budget) {
  kernels::MapSpace space(g, h);
  require_within(space, budget, "FF(G,H)");
  return kernels::ff_set(space);
}

std::uint64_t count_ff_maps(const MultiDigraph& g, const MultiDigraph& h, const GroupSpec& m,
                            std::uint64_t budget) {
  kernels::MapSpace space(g, h);
  require_within(space, budget, "FF map count");
  return kernels::count(space, Modulus::of(exponent(m)));
}

std::uint64_t count_ff_maps_oracle(const MultiDigraph& g, const MultiDigraph& h, const GroupSpec& m,
                                   std::uint64_t map_budget, std::uint64_t flow_budget) {
  kernels::MapSpace space(g, h);
  require_within(space, map_budget, "oracle FF map count");
  std::uint64_t count = 0;
  reference::for_each_map(g, h, [&](const std::vector<EdgeIndex>& a) {
    count += oracle_is_ff_group(EdgeMap(g, h, a), m, flow_budget).holds;
  });
  return count;
}

SearchResult exists_ff_map(const MultiDigraph& g, const MultiDigraph& h, Modulus n, std::uint64_t budget) {
  kernels::MapSpace space(g, h);
  auto first = kernels::first_map(space, n, budget);
  SearchResult result{first.status, std::nullopt, first.nodes_visited};
  if (first.status == SearchStatus::found) result.witness.emplace(g, h, std::move(first.assignment));
  return result;
}

SubcubicReport subcubic_equivalence_check(const MultiDigraph& g, const MultiDigraph& h,
                                          std::span<const std::uint64_t> moduli, std::uint64_t budget) {
  if (moduli.empty()) throw PreconditionError("subcubic check needs at least one modulus");
  const auto smallest = *std::min_element(moduli.begin(), moduli.end());
  if (smallest == 0) throw PreconditionError("moduli must be positive");
  if (g.max_degree() >= smallest) {
    throw PreconditionError("maximum degree of G is " + std::to_string(g.max_degree()) +
                            ", which is not below the smallest modulus " + std::to_string(smallest));
  }
  kernels::MapSpace space(g, h);
  require_within(space, budget, "subcubic check");
  auto scan = kernels::equivalence_scan(space, moduli);
  SubcubicReport report;
  report.moduli.assign(moduli.begin(), moduli.end());
  report.maps_checked = scan.maps_checked;
  report.violating_maps = scan.violating_maps;
  report.violations = std::move(scan.violations);
  return report;
}

}  // namespace ffc
