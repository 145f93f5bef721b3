#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffc/decide.hpp"
#include "ffc/ffset.hpp"
#include "ffc/map_search.hpp"

namespace ffc {

/// Default cap on map evaluations for graph-level computations.
inline constexpr std::uint64_t kDefaultMapBudget = 100'000'000;

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// FF(f,G,H): divisors of ff_gcd(f), or all of N when the gcd is 0.
FFSet ff_set_of_map(const EdgeMap& f);

/// FF(G,H) by exhaustive enumeration. Throws BudgetExceeded when
/// |E(H)|^|E(G)| > budget.
FFSet ff_set_of_graphs(const MultiDigraph& g, const MultiDigraph& h, std::uint64_t budget = kDefaultMapBudget);

/// Number of FF_M maps G -> H (decided through the exponent of M).
std::uint64_t count_ff_maps(const MultiDigraph& g, const MultiDigraph& h, const GroupSpec& m,
                            std::uint64_t budget = kDefaultMapBudget);

/// Same count, but every map is checked with the literal flow oracle.
std::uint64_t count_ff_maps_oracle(const MultiDigraph& g, const MultiDigraph& h, const GroupSpec& m,
                                   std::uint64_t map_budget = 1'000'000,
                                   std::uint64_t flow_budget = kDefaultFlowBudget);

using kernels::SearchStatus;

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<EdgeMap> witness;
  std::uint64_t nodes_visited = 0;
};

/// Lexicographically first map with n | ff_gcd (Z: gcd 0). The budget
/// bounds visited partial assignments; running out gives `unknown`.
SearchResult exists_ff_map(const MultiDigraph& g, const MultiDigraph& h, Modulus n,
                           std::uint64_t budget = kDefaultMapBudget);

struct SubcubicReport {
  std::vector<std::uint64_t> moduli;
  std::uint64_t maps_checked = 0;
  std::uint64_t violating_maps = 0;
  std::vector<kernels::Violation> violations;  // lexicographically first few

  bool ok() const { return violating_maps == 0; }
};

/// For every map f and every n in moduli, checks FF_n(f) <=> FF_Z(f).
/// Requires max degree of G < min(moduli).
SubcubicReport subcubic_equivalence_check(const MultiDigraph& g, const MultiDigraph& h,
                                          std::span<const std::uint64_t> moduli,
                                          std::uint64_t budget = kDefaultMapBudget);

}  // namespace ffc
