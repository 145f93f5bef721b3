#include "ffc/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "ffc/ff_sets.hpp"
#include "ffc/flows.hpp"
#include "ffc/reference.hpp"
#include "ffc/sampling.hpp"

namespace ffc {

namespace {

using Suite = std::function<std::string(std::mt19937_64&, std::uint64_t scale)>;

// Suites return an empty string on success, otherwise a description of the
// first violation.

std::string flow_span(std::mt19937_64& rng, std::uint64_t scale) {
  const std::vector<GroupSpec> groups = {GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::cyclic(4),
                                         parse_group("Z2xZ2"), GroupSpec::cyclic(5), GroupSpec::cyclic(6)};
  for (std::uint64_t i = 0; i < 50 * scale; ++i) {
    auto g = random_digraph(rng, 4, 0, 5);
    for (const auto& m : groups) {
      if (saturating_pow(m.order(), g.edge_count()) > 4096) continue;
      auto fast = enumerate_flows(g, m);
      auto slow = filter_flows(g, m);
      std::sort(fast.begin(), fast.end());
      if (fast != slow) return "flow generators miss flows on " + to_text(g) + " over " + m.to_string();
    }
  }
  return {};
}

std::string oracle_agreement(std::mt19937_64& rng, std::uint64_t scale) {
  const std::uint64_t max_n = scale > 1 ? 12 : 8;
  for (std::uint64_t i = 0; i < 100 * scale; ++i) {
    auto g = random_digraph(rng, 4, 0, 6);
    auto h = random_digraph(rng, 4, 1, 4);
    auto f = random_edge_map(rng, g, h);
    const auto gcd = ff_gcd(f);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const bool fast = is_ff_n(f, n).holds;
      const bool oracle = oracle_is_ff_group(f, GroupSpec::cyclic(n)).holds;
      if (fast != oracle || fast != (gcd % n == 0)) {
        return "FF_" + std::to_string(n) + " disagreement for map " + to_text(f);
      }
    }
  }
  return {};
}

std::string exponent_law(std::mt19937_64& rng, std::uint64_t scale) {
  const std::vector<std::pair<GroupSpec, GroupSpec>> pairs = {
      {GroupSpec::cyclic(6), parse_group("Z2xZ3")},
      {GroupSpec::cyclic(4), parse_group("Z2xZ4")},
      {GroupSpec::cyclic(2), parse_group("Z2xZ2")},
  };
  for (std::uint64_t i = 0; i < 10 * scale; ++i) {
    auto g = random_digraph(rng, 3, 1, 3);
    auto h = random_digraph(rng, 3, 1, 3);
    for (const auto& [m1, m2] : pairs) {
      const auto c1 = count_ff_maps_oracle(g, h, m1);
      const auto c2 = count_ff_maps_oracle(g, h, m2);
      if (c1 != c2 || c1 != count_ff_maps(g, h, m1)) {
        return "counts differ for " + m1.to_string() + " and " + m2.to_string();
      }
    }
  }
  return {};
}

std::string subcubic(std::mt19937_64&, std::uint64_t scale) {
  std::vector<std::uint64_t> moduli = {4, 5, 6, 7, 8};
  if (scale > 1) moduli.insert(moduli.end(), {9, 10, 11, 12});
  std::vector<std::pair<MultiDigraph, MultiDigraph>> cases = {{k4(), k4()}, {k4(), digon(3)}};
  if (scale > 1) cases.push_back({dicycle(4), k4()});
  for (const auto& [g, h] : cases) {
    auto report = subcubic_equivalence_check(g, h, moduli);
    if (!report.ok()) return std::to_string(report.violating_maps) + " maps violate the subcubic equivalence";
  }
  return {};
}

std::string tutte(std::mt19937_64&, std::uint64_t scale) {
  std::vector<MultiDigraph> graphs = {loop_graph(), k4(), petersen()};
  for (std::size_t k = 1; k <= 4 * scale; ++k) graphs.push_back(digon(k));
  for (std::size_t k = 1; k <= 5 * scale; ++k) graphs.push_back(dicycle(k));
  for (const auto& g : graphs) {
    if (saturating_pow(4, g.cyclomatic_number()) > kDefaultFlowBudget) continue;
    if (count_nowhere_zero_flows(g, GroupSpec::cyclic(4)) != count_nowhere_zero_flows(g, parse_group("Z2xZ2"))) {
      return "nowhere-zero counts differ on " + to_text(g);
    }
  }
  return {};
}

std::string kernels_vs_reference(std::mt19937_64& rng, std::uint64_t scale) {
  for (std::uint64_t i = 0; i < 30 * scale; ++i) {
    auto g = random_digraph(rng, 4, 0, 6);
    auto h = random_digraph(rng, 4, 0, 4);
    if (saturating_pow(h.edge_count(), g.edge_count()) > 5000) continue;
    if (ff_set_of_graphs(g, h) != reference::ff_set_of_graphs(g, h)) return "FF(G,H) mismatch on " + to_text(g);
    for (std::uint64_t n = 1; n <= 6; ++n) {
      if (count_ff_maps(g, h, GroupSpec::cyclic(n)) != reference::count_ff_maps(g, h, Modulus::cyclic(n))) {
        return "count mismatch for n = " + std::to_string(n);
      }
    }
  }
  return {};
}

}  // namespace

void check_builtins() {
  for (const char* spec : {"digon:1", "dicycle:3", "loop", "k4", "petersen"}) parse_builtin_spec(spec);
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"flow-span", flow_span},          {"oracle-agreement", oracle_agreement},
      {"exponent-law", exponent_law},    {"subcubic-equivalence", subcubic},
      {"tutte-invariance", tutte},       {"kernels-vs-reference", kernels_vs_reference},
  };
  const std::uint64_t scale = options.deep ? 10 : 1;
  std::vector<SuiteResult> results;
  for (const auto& [name, suite] : suites) {
    std::mt19937_64 rng(options.seed);
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r{name, false, {}, 0};
    try {
      r.detail = suite(rng, scale);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ffc
