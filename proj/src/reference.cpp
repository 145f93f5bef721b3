#include "ffc/reference.hpp"

#include <algorithm>

namespace ffc::reference {

void for_each_map(const MultiDigraph& g, const MultiDigraph& h,
                  const std::function<void(const std::vector<EdgeIndex>&)>& visit) {
  const std::size_t m = g.edge_count();
  const std::size_t width = h.edge_count();
  if (m > 0 && width == 0) return;
  std::vector<EdgeIndex> assignment(m, 0);
  while (true) {
    visit(assignment);
    std::size_t d = m;
    while (d-- > 0) {
      if (++assignment[d] < width) break;
      assignment[d] = 0;
    }
    if (d == static_cast<std::size_t>(-1)) return;
  }
}

FFSet ff_set_of_graphs(const MultiDigraph& g, const MultiDigraph& h) {
  FFSet set;
  for_each_map(g, h, [&](const std::vector<EdgeIndex>& a) { set.insert_gcd(ff_gcd(EdgeMap(g, h, a))); });
  return set;
}

std::uint64_t count_ff_maps(const MultiDigraph& g, const MultiDigraph& h, Modulus m) {
  std::uint64_t count = 0;
  for_each_map(g, h, [&](const std::vector<EdgeIndex>& a) { count += m.divides_gcd(ff_gcd(EdgeMap(g, h, a))); });
  return count;
}

std::optional<std::vector<EdgeIndex>> first_ff_map(const MultiDigraph& g, const MultiDigraph& h, Modulus m) {
  std::optional<std::vector<EdgeIndex>> first;
  for_each_map(g, h, [&](const std::vector<EdgeIndex>& a) {
    if (!first && m.divides_gcd(ff_gcd(EdgeMap(g, h, a)))) first = a;
  });
  return first;
}

std::uint64_t equivalence_violations(const MultiDigraph& g, const MultiDigraph& h,
                                     std::span<const std::uint64_t> moduli) {
  std::uint64_t violations = 0;
  for_each_map(g, h, [&](const std::vector<EdgeIndex>& a) {
    const auto gcd = ff_gcd(EdgeMap(g, h, a));
    const bool bad = std::any_of(moduli.begin(), moduli.end(),
                                 [&](std::uint64_t n) { return (gcd % n == 0) != (gcd == 0); });
    violations += bad;
  });
  return violations;
}

}  // namespace ffc::reference
