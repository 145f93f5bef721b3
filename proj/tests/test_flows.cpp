#include <doctest.h>

#include <algorithm>
#include <random>

#include "ffc/flows.hpp"
#include "ffc/sampling.hpp"

using namespace ffc;

namespace {

GroupVector scalars(std::vector<std::int64_t> xs) { return GroupVector::from_scalars(xs); }

std::int64_t dot(const SignedEdgeVector& a, const SignedEdgeVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("star_tension") {
  CHECK(star_tension(digon(3), 0) == SignedEdgeVector{1, 1, 1});
  CHECK(star_tension(digon(3), 1) == SignedEdgeVector{-1, -1, -1});
  CHECK(star_tension(loop_graph(), 0) == SignedEdgeVector{0});
  auto g = k4();
  for (Vertex v = 0; v < 4; ++v) {
    auto t = star_tension(g, v);
    for (EdgeIndex e = 0; e < 6; ++e) {
      const auto& edge = g.edge(e);
      const std::int64_t expect = edge.tail == v ? 1 : edge.head == v ? -1 : 0;
      CHECK(t[e] == expect);
    }
  }
  CHECK_THROWS_AS(star_tension(k4(), 4), std::out_of_range);
}

TEST_CASE("is_flow") {
  CHECK(is_flow(dicycle(3), scalars({1, 1, 1}), GroupSpec::integers()));
  CHECK(is_flow(digon(3), scalars({1, 1, 1}), GroupSpec::cyclic(3)));
  CHECK_FALSE(is_flow(digon(3), scalars({1, 1, 1}), GroupSpec::integers()));
  CHECK(is_flow(loop_graph(), scalars({4}), GroupSpec::cyclic(5)));
  CHECK_THROWS(is_flow(digon(3), scalars({1, 1}), GroupSpec::cyclic(3)));
  CHECK_THROWS(is_flow(digon(3), scalars({1, 1, 3}), GroupSpec::cyclic(3)));
}

TEST_CASE("is_tension") {
  auto tau = scalars({9, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(is_tension(digon(7), tau, GroupSpec::cyclic(3)), std::invalid_argument);
  auto tau3 = scalars({0, 0, 0, 0, 0, 0, 0});
  CHECK(is_tension(digon(7), tau3, GroupSpec::cyclic(3)));
  CHECK(is_tension(digon(7), tau, GroupSpec::integers()) == false);
  for (auto m : {GroupSpec::integers(), GroupSpec::cyclic(4), parse_group("Z2xZ2")}) {
    for (Vertex v = 0; v < 4; ++v) {
      auto s = star_tension(k4(), v);
      GroupVector t(6, m.width());
      for (EdgeIndex e = 0; e < 6; ++e) {
        for (std::size_t j = 0; j < m.width(); ++j) {
          const auto order = j < m.free_rank ? 0 : m.cyclic_orders[j - m.free_rank];
          t.at(e)[j] = order ? ((s[e] % std::int64_t(order)) + std::int64_t(order)) % std::int64_t(order) : s[e];
        }
      }
      CHECK(is_tension(k4(), t, m));
    }
  }
}

TEST_CASE("is_tension reduces integer labels against a modulus") {
  // 9 - 0 around each circuit: 0 mod 3, 1 mod 2.
  GroupVector tau(7, 1);
  tau.at(0)[0] = 0;  // 9 mod 3
  CHECK(is_tension(digon(7), tau, GroupSpec::cyclic(3)));
  tau.at(0)[0] = 1;  // 9 mod 2
  CHECK_FALSE(is_tension(digon(7), tau, GroupSpec::cyclic(2)));
}

TEST_CASE("flow enumeration sizes") {
  CHECK(enumerate_flows(dicycle(3), GroupSpec::cyclic(2)).size() == 2);
  CHECK(enumerate_flows(digon(3), GroupSpec::cyclic(3)).size() == 9);
  CHECK(enumerate_flows(loop_graph(), GroupSpec::cyclic(5)).size() == 5);
  CHECK(filter_flows(digon(3), GroupSpec::cyclic(3)).size() == 9);

  auto d2 = filter_flows(digon(2), GroupSpec::cyclic(2));
  REQUIRE(d2.size() == 2);
  CHECK(d2[0] == scalars({0, 0}));
  CHECK(d2[1] == scalars({1, 1}));

  auto c3 = filter_flows(dicycle(3), GroupSpec::cyclic(3));
  REQUIRE(c3.size() == 3);
  for (std::int64_t a = 0; a < 3; ++a) CHECK(c3[a] == scalars({a, a, a}));

  auto d3 = filter_flows(digon(3), GroupSpec::cyclic(2));
  CHECK(d3.size() == 4);
  for (const auto& phi : d3) CHECK((phi.at(0)[0] + phi.at(1)[0] + phi.at(2)[0]) % 2 == 0);

  CHECK(FlowStream(petersen(), GroupSpec::cyclic(3)).size() == 729);
  CHECK_THROWS_AS(enumerate_flows(petersen(), GroupSpec::cyclic(3), 100), BudgetExceeded);
  CHECK_THROWS_AS(FlowStream(k4(), GroupSpec::integers()), AlgebraError);
}

TEST_CASE("span property: generated flows equal filtered flows") {
  std::mt19937_64 rng(17);
  const std::vector<GroupSpec> groups = {GroupSpec::trivial(),   GroupSpec::cyclic(2), GroupSpec::cyclic(3),
                                         GroupSpec::cyclic(4),   parse_group("Z2xZ2"), GroupSpec::cyclic(5),
                                         parse_group("Z2xZ3"),   GroupSpec::cyclic(7)};
  for (int i = 0; i < 200; ++i) {
    auto g = random_digraph(rng, 4, 0, 5);
    for (const auto& m : groups) {
      if (saturating_pow(m.order(), g.edge_count()) > 4096) continue;
      auto fast = enumerate_flows(g, m);
      auto slow = filter_flows(g, m);
      std::sort(fast.begin(), fast.end());
      CHECK(fast == slow);
      CHECK(std::adjacent_find(fast.begin(), fast.end()) == fast.end());
    }
  }
}

TEST_CASE("Kirchhoff and duality formulations agree") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    auto g = random_digraph(rng, 4, 0, 5);
    for (auto m : {GroupSpec::cyclic(3), parse_group("Z2xZ2")}) {
      if (saturating_pow(m.order(), g.edge_count()) > 1024) continue;
      FilteredFlowStream flows(g, m);
      std::size_t n = 0;
      while (flows.next()) {
        CHECK(is_flow_by_duality(g, flows.current(), m));
        ++n;
      }
      CHECK(n == FlowStream(g, m).size());
    }
    std::uniform_int_distribution<std::int64_t> val(0, 5);
    GroupVector phi(g.edge_count(), 1);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) phi.at(e)[0] = val(rng);
    CHECK(is_flow(g, phi, GroupSpec::cyclic(6)) == is_flow_by_duality(g, phi, GroupSpec::cyclic(6)));
    CHECK(is_flow(g, phi, GroupSpec::integers()) == is_flow_by_duality(g, phi, GroupSpec::integers()));
  }
}

TEST_CASE("circuits are orthogonal to star tensions") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    auto g = random_digraph(rng, 6, 0, 10);
    auto s = spanning_structure(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto t = star_tension(g, v);
      for (const auto& c : s.fundamental_circuits) CHECK(dot(t, c) == 0);
    }
  }
}

TEST_CASE("nowhere-zero flow counts") {
  CHECK(count_nowhere_zero_flows(dicycle(3), GroupSpec::cyclic(2)) == 1);
  CHECK(count_nowhere_zero_flows(digon(2), GroupSpec::cyclic(2)) == 1);
  // Flow polynomial of K4 is (k-1)(k-2)(k-3).
  CHECK(count_nowhere_zero_flows(k4(), GroupSpec::cyclic(4)) == 6);
  CHECK(count_nowhere_zero_flows(k4(), parse_group("Z2xZ2")) == 6);
  CHECK(count_nowhere_zero_flows(k4(), GroupSpec::cyclic(5)) == 24);
  // The Petersen graph has no nowhere-zero 4-flow and 240 nowhere-zero 5-flows.
  CHECK(count_nowhere_zero_flows(petersen(), GroupSpec::cyclic(4)) == 0);
  CHECK(count_nowhere_zero_flows(petersen(), parse_group("Z2xZ2")) == 0);
  CHECK(count_nowhere_zero_flows(petersen(), GroupSpec::cyclic(5)) == 240);
  // A loop carries any nonzero value.
  CHECK(count_nowhere_zero_flows(loop_graph(), GroupSpec::cyclic(4)) == 3);
}

TEST_CASE("Tutte invariance on random graphs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    auto g = random_digraph(rng, 5, 0, 7);
    CHECK(count_nowhere_zero_flows(g, GroupSpec::cyclic(4)) == count_nowhere_zero_flows(g, parse_group("Z2xZ2")));
    CHECK(count_nowhere_zero_flows(g, GroupSpec::cyclic(6)) == count_nowhere_zero_flows(g, parse_group("Z2xZ3")));
  }
}
