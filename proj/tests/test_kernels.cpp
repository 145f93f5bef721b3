#include <doctest.h>

#include <random>

#include "ffc/map_search.hpp"
#include "ffc/reference.hpp"
#include "ffc/sampling.hpp"

using namespace ffc;

TEST_CASE("map space shape") {
  kernels::MapSpace space(k4(), digon(3));
  CHECK(space.source_edges() == 6);
  CHECK(space.target_edges() == 3);
  CHECK(space.rows() == 4);
  CHECK(space.cols() == 2);
  CHECK(space.map_count() == 729);
  CHECK(space.free_edges() == 0);

  MultiDigraph with_loops(2, {{0, 0}, {0, 1}, {1, 1}});
  kernels::MapSpace looped(with_loops, digon(2));
  CHECK(looped.free_edges() == 2);
  CHECK(looped.free_multiplicity() == 4);
  CHECK(looped.map_count() == 8);
  const std::vector<EdgeIndex> choice = {1};
  CHECK(looped.expand(choice) == std::vector<EdgeIndex>{0, 1, 0});
}

TEST_CASE("kernels match the serial reference on random pairs") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 150; ++i) {
    auto g = random_digraph(rng, 4, 0, 6);
    auto h = random_digraph(rng, 4, 0, 4);
    if (saturating_pow(h.edge_count(), g.edge_count()) > 5000) continue;
    kernels::MapSpace space(g, h);
    CHECK(kernels::ff_set(space) == reference::ff_set_of_graphs(g, h));
    for (std::uint64_t n = 1; n <= 6; ++n) {
      CHECK(kernels::count(space, Modulus::cyclic(n)) == reference::count_ff_maps(g, h, Modulus::cyclic(n)));
      auto first = kernels::first_map(space, Modulus::cyclic(n), 1'000'000);
      auto ref = reference::first_ff_map(g, h, Modulus::cyclic(n));
      CHECK((first.status == kernels::SearchStatus::found) == ref.has_value());
      if (ref) CHECK(first.assignment == *ref);
    }
    CHECK(kernels::count(space, Modulus::integers()) == reference::count_ff_maps(g, h, Modulus::integers()));
    if (g.max_degree() < 4) {
      const std::vector<std::uint64_t> moduli = {4, 5, 6};
      auto scan = kernels::equivalence_scan(space, moduli);
      CHECK(scan.violating_maps == reference::equivalence_violations(g, h, moduli));
      CHECK(scan.maps_checked == space.map_count());
    }
  }
}

TEST_CASE("first_map reports unknown when the node budget runs out") {
  kernels::MapSpace space(k4(), petersen());
  auto r = kernels::first_map(space, Modulus::integers(), 10);
  CHECK(r.status == kernels::SearchStatus::unknown);
  CHECK(r.nodes_visited == 10);
}

TEST_CASE("equivalence scan records violations for a non-subcubic source") {
  // The unique map digon(4) -> loop is FF_4 but not FF_Z.
  kernels::MapSpace space(digon(4), loop_graph());
  const std::vector<std::uint64_t> moduli = {4};
  auto scan = kernels::equivalence_scan(space, moduli);
  CHECK(scan.maps_checked == 1);
  CHECK(scan.violating_maps == 1);
  REQUIRE(scan.violations.size() == 1);
  CHECK(scan.violations[0].gcd == 4);
  CHECK(scan.violations[0].modulus == 4);
}
