#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ffc/decide.hpp"
#include "ffc/sampling.hpp"

using namespace ffc;

namespace {

EdgeMap identity(const MultiDigraph& g) {
  std::vector<EdgeIndex> a(g.edge_count());
  std::iota(a.begin(), a.end(), 0);
  return EdgeMap(g, g, a);
}

EdgeMap bijection_d3_c3() { return EdgeMap(digon(3), dicycle(3), {0, 1, 2}); }
EdgeMap coloring_k4_d3() { return EdgeMap(k4(), digon(3), {0, 1, 2, 2, 1, 0}); }
EdgeMap constant_d9_d7() { return EdgeMap(digon(9), digon(7), std::vector<EdgeIndex>(9, 0)); }

bool kirchhoff_mod(const MultiDigraph& g, const std::vector<std::uint64_t>& x, std::uint64_t n) {
  std::vector<std::uint64_t> net(g.vertex_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    net[g.edge(e).tail] = (net[g.edge(e).tail] + x[e]) % n;
    net[g.edge(e).head] = (net[g.edge(e).head] + n - x[e]) % n;
  }
  return std::all_of(net.begin(), net.end(), [](std::uint64_t v) { return v == 0; });
}

// Definitional check over Z_n, written without the library's flow code.
bool brute_ff_n(const EdgeMap& f, std::uint64_t n) {
  const auto& g = f.source();
  const auto& h = f.target();
  std::vector<std::uint64_t> phi(h.edge_count(), 0), pulled(g.edge_count());
  while (true) {
    if (kirchhoff_mod(h, phi, n)) {
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) pulled[e] = phi[f(e)];
      if (!kirchhoff_mod(g, pulled, n)) return false;
    }
    std::size_t i = 0;
    while (i < phi.size() && ++phi[i] == n) phi[i++] = 0;
    if (i == phi.size()) return true;
  }
}

}  // namespace

TEST_CASE("EdgeMap validation and parsing") {
  CHECK_THROWS(EdgeMap(digon(2), digon(2), {0}));
  CHECK_THROWS(EdgeMap(digon(2), digon(2), {0, 2}));
  CHECK_THROWS(EdgeMap(digon(1), MultiDigraph(2, {}), {0}));
  CHECK(EdgeMap(MultiDigraph(1, {}), MultiDigraph(1, {}), {}).assignment().empty());

  auto f = parse_edge_map("# map\n0\n1 # second\n2\n", digon(3), dicycle(3));
  CHECK(f.assignment() == bijection_d3_c3().assignment());
  CHECK(parse_edge_map(to_text(f), digon(3), dicycle(3)).assignment() == f.assignment());
  CHECK_THROWS(parse_edge_map("0\n1\n", digon(3), dicycle(3)));
  CHECK_THROWS(parse_edge_map("0\n1\n3\n", digon(3), dicycle(3)));
  CHECK_THROWS(parse_edge_map("0\nx\n1\n", digon(3), dicycle(3)));
}

TEST_CASE("Modulus") {
  CHECK(Modulus::cyclic(3).divides(-9));
  CHECK_FALSE(Modulus::cyclic(3).divides(4));
  CHECK(Modulus::integers().divides(0));
  CHECK_FALSE(Modulus::integers().divides(3));
  CHECK(Modulus::integers().divides_gcd(0));
  CHECK(Modulus::cyclic(5).divides_gcd(0));
  CHECK(Modulus::of(exponent(parse_group("Z2xZ3"))) == Modulus::cyclic(6));
  CHECK(Modulus::of(exponent(parse_group("Z"))) == Modulus::integers());
  CHECK_THROWS(Modulus::cyclic(0));
}

TEST_CASE("algebraic_image") {
  CHECK(algebraic_image(bijection_d3_c3(), {1, 1, 1}) == SignedEdgeVector{1, 1, 1});
  CHECK(algebraic_image(constant_d9_d7(), SignedEdgeVector(9, 1)) == SignedEdgeVector{9, 0, 0, 0, 0, 0, 0});
  CHECK(algebraic_image(coloring_k4_d3(), SignedEdgeVector(6, 0)) == SignedEdgeVector(3, 0));
  CHECK(algebraic_image(coloring_k4_d3(), {1, 2, 3, 4, 5, 6}) == SignedEdgeVector{7, 7, 7});
}

TEST_CASE("discrepancy and ff_gcd on worked examples") {
  auto d = discrepancy(bijection_d3_c3());
  CHECK(d.rows() == 2);
  CHECK(d.cols() == 1);
  CHECK(d.at(0, 0) == 3);
  CHECK(d.at(1, 0) == -3);
  CHECK(ff_gcd(bijection_d3_c3()) == 3);

  CHECK(ff_gcd(coloring_k4_d3()) == 2);

  auto c = discrepancy(constant_d9_d7());
  for (std::size_t col = 0; col < c.cols(); ++col) {
    CHECK(std::abs(c.at(0, col)) == 9);
    CHECK(std::abs(c.at(1, col)) == 9);
  }
  CHECK(ff_gcd(constant_d9_d7()) == 9);

  CHECK(ff_gcd(EdgeMap(digon(6), loop_graph(), std::vector<EdgeIndex>(6, 0))) == 6);

  for (const auto& g : {digon(4), dicycle(5), loop_graph(), k4(), petersen()}) {
    CHECK(discrepancy(identity(g)).is_zero());
    CHECK(ff_gcd(identity(g)) == 0);
  }
}

TEST_CASE("decision procedure on worked examples") {
  auto f = bijection_d3_c3();
  CHECK(is_ff_n(f, 3).holds);
  auto two = is_ff_n(f, 2);
  CHECK_FALSE(two.holds);
  REQUIRE(two.certificate);
  CHECK(std::abs(two.certificate->value) == 3);
  CHECK(two.certificate->modulus == Modulus::cyclic(2));
  CHECK_FALSE(is_ff_Z(f));
  CHECK_FALSE(is_ff_group(f, GroupSpec::integers()));
  CHECK(is_ff_group(f, GroupSpec::trivial()));

  CHECK(is_ff_n(coloring_k4_d3(), 2).holds);
  CHECK_FALSE(is_ff_n(coloring_k4_d3(), 3).holds);
  CHECK(is_ff_group(coloring_k4_d3(), parse_group("Z2xZ2")));
  CHECK_FALSE(is_ff_Z(constant_d9_d7()));
  CHECK(is_ff_Z(identity(k4())));
  CHECK(is_ff_n(constant_d9_d7(), 1).holds);
  CHECK_THROWS(is_ff_n(f, 0));
}

TEST_CASE("certificate is the first failing entry and is genuine") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    auto g = random_digraph(rng, 5, 0, 7);
    auto h = random_digraph(rng, 4, 1, 5);
    auto f = random_edge_map(rng, g, h);
    auto d = discrepancy(f);
    for (std::uint64_t n : {2, 3, 5}) {
      auto dec = is_ff_n(f, n);
      if (dec.holds) continue;
      REQUIRE(dec.certificate);
      const auto& c = *dec.certificate;
      CHECK(d.at(c.vertex, c.circuit) == c.value);
      CHECK(c.value % std::int64_t(n) != 0);
      for (std::size_t k = 0; k < c.vertex * d.cols() + c.circuit; ++k) CHECK(d.entries()[k] % std::int64_t(n) == 0);
    }
    for (auto x : d.entries()) CHECK(std::uint64_t(std::abs(x)) <= g.edge_count());
  }
}

TEST_CASE("oracle on worked examples") {
  CHECK(oracle_is_ff_group(bijection_d3_c3(), GroupSpec::cyclic(3)).holds);
  auto v = oracle_is_ff_group(coloring_k4_d3(), GroupSpec::cyclic(3));
  CHECK_FALSE(v.holds);
  REQUIRE(v.refuting_flow);
  CHECK(refutes(coloring_k4_d3(), *v.refuting_flow, GroupSpec::cyclic(3)));
  const auto ones = GroupVector::from_scalars(std::vector<std::int64_t>{1, 1, 1});
  CHECK(refutes(coloring_k4_d3(), ones, GroupSpec::cyclic(3)));
  const auto all = refuting_flows(coloring_k4_d3(), GroupSpec::cyclic(3));
  // Z3 flows on digon(3) form a plane; the ones pulling back to flows form a line.
  CHECK(all.size() == 6);
  CHECK(std::find(all.begin(), all.end(), ones) != all.end());
  CHECK(refuting_flows(bijection_d3_c3(), GroupSpec::cyclic(3)).empty());
  // A target with only the zero flow.
  auto f = EdgeMap(digon(2), MultiDigraph(3, {{0, 1}, {1, 2}}), {0, 1});
  CHECK(oracle_is_ff_group(f, GroupSpec::cyclic(2)).holds);
  CHECK_THROWS_AS(oracle_is_ff_group(f, GroupSpec::integers()), AlgebraError);
}

TEST_CASE("fast path, library oracle and brute force agree") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    auto g = random_digraph(rng, 4, 0, 6);
    auto h = random_digraph(rng, 4, 1, 4);
    auto f = random_edge_map(rng, g, h);
    const auto gcd = ff_gcd(f);
    for (std::uint64_t n = 1; n <= 7; ++n) {
      const bool fast = is_ff_n(f, n).holds;
      CHECK(fast == (gcd % n == 0));
      CHECK(fast == brute_ff_n(f, n));
      auto verdict = oracle_is_ff_group(f, GroupSpec::cyclic(n));
      CHECK(fast == verdict.holds);
      if (verdict.refuting_flow) {
        CHECK(is_flow(h, *verdict.refuting_flow, GroupSpec::cyclic(n)));
        CHECK_FALSE(is_flow(g, pull_back(f, *verdict.refuting_flow), GroupSpec::cyclic(n)));
      }
    }
  }
}

TEST_CASE("a lone reversal can change the gcd over Z") {
  auto f = EdgeMap(dicycle(2), loop_graph(), {0, 0});
  CHECK(ff_gcd(f) == 0);
  CHECK(ff_gcd(EdgeMap(dicycle(2).with_reversed_edge(1), loop_graph(), {0, 0})) == 2);
}

TEST_CASE("divisor-ideal, product, monotone and orientation laws") {
  std::mt19937_64 rng(47);
  const std::vector<GroupSpec> groups = {GroupSpec::cyclic(2), GroupSpec::cyclic(3), parse_group("Z2xZ2"),
                                         GroupSpec::cyclic(4)};
  for (int i = 0; i < 200; ++i) {
    auto g = random_digraph(rng, 4, 0, 6);
    auto h = random_digraph(rng, 4, 1, 4);
    auto f = random_edge_map(rng, g, h);
    for (std::uint64_t a = 1; a <= 12; ++a) {
      for (std::uint64_t b = 1; b <= 12; ++b) {
        const bool fa = is_ff_n(f, a).holds, fb = is_ff_n(f, b).holds;
        if (fa && a % b == 0) CHECK(fb);
        if (fa && fb) CHECK(is_ff_n(f, std::lcm(a, b)).holds);
      }
    }
    if (is_ff_Z(f)) {
      for (const auto& m : groups) CHECK(is_ff_group(f, m));
    }
    for (const auto& m1 : groups) {
      for (const auto& m2 : groups) {
        const auto m12 = product(m1, m2);
        if (saturating_pow(m12.order(), h.edge_count()) > 20000) continue;
        CHECK(oracle_is_ff_group(f, m12).holds ==
              (oracle_is_ff_group(f, m1).holds && oracle_is_ff_group(f, m2).holds));
      }
    }
    const auto gcd = ff_gcd(f);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      CHECK(ff_gcd(EdgeMap(g.with_reversed_edge(e), h, f.assignment())) % 2 == gcd % 2);
    }
    for (EdgeIndex t = 0; t < h.edge_count(); ++t) {
      CHECK(ff_gcd(EdgeMap(g, h.with_reversed_edge(t), f.assignment())) % 2 == gcd % 2);
      auto g2 = g;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (f(e) == t) g2 = g2.with_reversed_edge(e);
      }
      CHECK(ff_gcd(EdgeMap(g2, h.with_reversed_edge(t), f.assignment())) == gcd);
    }
  }
}
