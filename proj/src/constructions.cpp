#include "ffc/constructions.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "ffc/algebra.hpp"
#include "ffc/ff_sets.hpp"

namespace ffc {

namespace {

// reach[v]: v is a nonnegative combination of gens, for v in [0, limit].
std::vector<char> reach_table(std::uint64_t limit, std::span<const std::uint64_t> gens) {
  std::vector<char> reach(limit + 1, 0);
  reach[0] = 1;
  for (std::uint64_t v = 1; v <= limit; ++v) {
    for (auto g : gens) {
      if (g != 0 && g <= v && reach[v - g]) {
        reach[v] = 1;
        break;
      }
    }
  }
  return reach;
}

bool all_in_cone(const std::vector<std::uint64_t>& targets, const std::vector<char>& reach) {
  return std::all_of(targets.begin(), targets.end(), [&](std::uint64_t a) { return reach[a] != 0; });
}

}  // namespace

DigonFamily::DigonFamily(std::vector<std::uint64_t> multiplicities) {
  for (auto m : multiplicities) {
    if (m == 0) throw std::invalid_argument("digon multiplicities must be >= 1");
    if (std::find(multiplicities_.begin(), multiplicities_.end(), m) == multiplicities_.end()) {
      multiplicities_.push_back(m);
    }
  }
  if (multiplicities_.empty()) throw std::invalid_argument("a digon family needs at least one digon");
}

std::uint64_t DigonFamily::max() const { return *std::max_element(multiplicities_.begin(), multiplicities_.end()); }

std::size_t DigonFamily::edge_count() const {
  std::size_t total = 0;
  for (auto m : multiplicities_) total += m;
  return total;
}

MultiDigraph DigonFamily::graph() const {
  std::vector<MultiDigraph> parts;
  for (auto m : multiplicities_) parts.push_back(digon(m));
  return disjoint_union(parts);
}

std::optional<DigonFamily> as_digon_family(const MultiDigraph& g) {
  if (g.vertex_count() == 0 || g.vertex_count() % 2 != 0) return std::nullopt;
  std::vector<std::uint64_t> counts(g.vertex_count() / 2, 0);
  std::size_t component = 0;
  for (const Edge& e : g.edges()) {
    if (e.tail % 2 != 0 || e.head != e.tail + 1) return std::nullopt;
    const std::size_t c = e.tail / 2;
    if (c < component) return std::nullopt;
    component = c;
    ++counts[c];
  }
  for (auto c : counts) {
    if (c == 0) return std::nullopt;
  }
  auto sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return DigonFamily(counts);
}

FFSet ff_set_digons(const DigonFamily& a, const DigonFamily& b) {
  const auto& targets = a.multiplicities();
  const std::uint64_t limit = a.max();
  std::vector<std::uint64_t> gens = b.multiplicities();
  if (all_in_cone(targets, reach_table(limit, gens))) return FFSet::all();
  // A generator n > max A cannot be used, so those n behave like cone(B) alone.
  std::vector<std::uint64_t> members;
  gens.push_back(0);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    gens.back() = n;
    if (all_in_cone(targets, reach_table(limit, gens))) members.push_back(n);
  }
  return FFSet::down_closure(members);
}

std::optional<ConeDecomposition> cone_decomposition(std::uint64_t a, std::span<const std::uint64_t> generators,
                                                    std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cone_decomposition: n must be >= 1");
  std::vector<std::uint64_t> gens;
  for (auto g : generators)
    if (g > 0 && g <= a) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // fewest[v]: least number of generators summing to v.
  constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> fewest(a + 1, kInf);
  fewest[0] = 0;
  for (std::uint64_t v = 1; v <= a; ++v) {
    for (auto g : gens) {
      if (g > v) break;
      if (fewest[v - g] != kInf) fewest[v] = std::min(fewest[v], fewest[v - g] + 1);
    }
  }
  auto valid = [&](std::uint64_t v) { return v <= a && (a - v) % n == 0; };
  std::uint64_t best = kInf;
  for (std::uint64_t v = a % n; v <= a; v += n) best = std::min(best, fewest[v]);
  if (best == kInf) return std::nullopt;

  // Smallest ascending parts list of length `best` landing on a valid sum.
  std::vector<std::uint64_t> parts;
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::size_t>> dead;
  auto search = [&](auto&& self, std::uint64_t sum, std::uint64_t left, std::size_t from) -> bool {
    if (left == 0) return valid(sum);
    if (dead.count({sum, left, from})) return false;
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (sum + gens[i] * left > a) break;
      parts.push_back(gens[i]);
      if (self(self, sum + gens[i], left - 1, i)) return true;
      parts.pop_back();
    }
    dead.insert({sum, left, from});
    return false;
  };
  if (!search(search, 0, best, 0)) return std::nullopt;
  std::uint64_t used = 0;
  for (auto p : parts) used += p;
  return ConeDecomposition{parts, (a - used) / n};
}

namespace {

EdgeMap build_digon_map(const DigonFamily& a, const DigonFamily& b, std::uint64_t n, const std::string& cone) {
  const auto& targets = a.multiplicities();
  const auto& gens = b.multiplicities();
  std::vector<ConeDecomposition> plans;
  for (auto x : targets) {
    auto d = cone_decomposition(x, gens, n);
    if (!d) {
      throw ConeError(x, std::to_string(x) + " is not in the integer cone of " + cone);
    }
    plans.push_back(std::move(*d));
  }

  std::vector<std::size_t> target_offset;
  std::size_t offset = 0;
  for (auto m : gens) {
    target_offset.push_back(offset);
    offset += m;
  }
  std::vector<EdgeIndex> assignment;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& plan = plans[i];
    assignment.insert(assignment.end(), plan.multiples * n, 0);
    for (auto part : plan.parts) {
      const auto j = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), part) - gens.begin());
      for (std::uint64_t k = 0; k < part; ++k) assignment.push_back(target_offset[j] + k);
    }
  }
  return EdgeMap(a.graph(), b.graph(), std::move(assignment));
}

}  // namespace

EdgeMap digon_ff_map(const DigonFamily& a, const DigonFamily& b, std::uint64_t n) {
  return digon_ff_map(a, b, Modulus::cyclic(n));
}

EdgeMap digon_ff_map(const DigonFamily& a, const DigonFamily& b, Modulus n) {
  // Over Z no multiples of n may be used; any n above max A forces that.
  auto f = n.is_integers() ? build_digon_map(a, b, a.max() + 1, "B")
                           : build_digon_map(a, b, n.raw(), "B u {" + n.to_string() + "}");
  if (!n.divides_gcd(ff_gcd(f))) {
    throw std::logic_error("digon_ff_map produced a map that is not FF_" + n.to_string());
  }
  return f;
}

Witness build_witness(std::span<const std::uint64_t> t) {
  WitnessPlan plan;
  plan.t = FFSet::down_closure(t).maximal_elements();
  if (plan.t.empty()) return {digon(1), MultiDigraph(), plan};

  const std::uint64_t p = next_prime_above(checked_mul(4, plan.t.back()));
  const std::uint64_t p_prime = checked_mul(p, 5) / 4 + 1;
  if (checked_mul(p_prime, 2) >= checked_mul(p, 3)) {
    throw std::logic_error("no integer strictly between 1.25p and 1.5p for p = " + std::to_string(p));
  }
  plan.p = p;
  plan.p_prime = p_prime;
  plan.a = {p, p_prime};
  for (auto x : plan.t) plan.b.push_back(p - x);
  for (auto x : plan.t) plan.b.push_back(p_prime - x);
  for (auto x : plan.b) {
    if (checked_mul(x, 4) <= checked_mul(p, 3)) throw std::logic_error("witness B element not above 3p/4");
  }
  DigonFamily a(plan.a);
  DigonFamily b(plan.b);
  return {a.graph(), b.graph(), std::move(plan)};
}

WitnessCheck verify_witness(const WitnessPlan& plan) {
  WitnessCheck check;
  check.expected = FFSet::down_closure(plan.t);
  if (plan.t.empty()) {
    check.computed = ff_set_of_graphs(digon(1), MultiDigraph());
  } else {
    check.computed = ff_set_digons(DigonFamily(plan.a), DigonFamily(plan.b));
  }
  check.pass = check.expected == check.computed;
  return check;
}

}  // namespace ffc
