#pragma once

// OpenMP kernels over the map space E(G)^E(H).
//
// A map is built one source edge at a time. Each assignment adds the target
// edge's circuit coefficients to the discrepancy rows of the source edge's
// endpoints; once a vertex's last incident edge is placed its row is final
// and its gcd folds into the running gcd. The final gcd always divides the
// running one, which is what every pruning rule below relies on.
//
// Blocks of the map space are fixed by the images of the leading source
// edges and distributed with a dynamic schedule. Every reduction (set union,
// sums, sorted violation lists) is order-independent, so results do not
// depend on the thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffc/decide.hpp"
#include "ffc/ffset.hpp"
#include "ffc/graph.hpp"

namespace ffc::kernels {

class MapSpace {
 public:
  MapSpace(const MultiDigraph& source, const MultiDigraph& target);

  std::size_t source_edges() const { return source_edges_; }
  std::size_t target_edges() const { return target_edges_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Non-loop source edges, in index order. Loops never touch a row.
  const std::vector<EdgeIndex>& active_edges() const { return active_; }
  std::size_t free_edges() const { return source_edges_ - active_.size(); }
  /// |E(H)|^|E(G)|, saturating.
  std::uint64_t map_count() const;
  /// |E(H)|^free_edges, saturating.
  std::uint64_t free_multiplicity() const;

  struct Term {
    std::uint32_t col;
    std::int32_t coef;
  };
  std::span<const Term> circuit_terms(EdgeIndex target_edge) const {
    return {terms_.data() + term_offset_[target_edge], term_offset_[target_edge + 1] - term_offset_[target_edge]};
  }
  Vertex tail(std::size_t depth) const { return tails_[depth]; }
  Vertex head(std::size_t depth) const { return heads_[depth]; }
  /// Vertices whose row becomes final once depth `depth` is assigned.
  const std::vector<Vertex>& finalized_at(std::size_t depth) const { return finalized_[depth]; }

  /// Full assignment from per-depth choices (loops go to target edge 0).
  std::vector<EdgeIndex> expand(std::span<const EdgeIndex> choices) const;

 private:
  std::size_t source_edges_;
  std::size_t target_edges_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<EdgeIndex> active_;
  std::vector<Vertex> tails_, heads_;
  std::vector<std::vector<Vertex>> finalized_;
  std::vector<std::size_t> term_offset_;
  std::vector<Term> terms_;
};

/// Union of divisors(ff_gcd(f)) over all maps f.
FFSet ff_set(const MapSpace& space);

/// Number of maps whose gcd is divisible by m.
std::uint64_t count(const MapSpace& space, Modulus m);

struct Violation {
  std::vector<EdgeIndex> assignment;
  std::uint64_t modulus;
  std::uint64_t gcd;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct EquivalenceScan {
  std::uint64_t maps_checked = 0;
  std::uint64_t violating_maps = 0;
  std::vector<Violation> violations;  // sorted; at most `keep` of them
};

/// Looks for maps with (n | g) != (g == 0) for some n in moduli.
EquivalenceScan equivalence_scan(const MapSpace& space, std::span<const std::uint64_t> moduli,
                                 std::size_t keep = 64);

enum class SearchStatus { found, none, unknown };

struct FirstMap {
  SearchStatus status = SearchStatus::none;
  std::vector<EdgeIndex> assignment;
  std::uint64_t nodes_visited = 0;
};

/// Serial lexicographic search for the first map with m | gcd. Stops with
/// `unknown` after `node_budget` partial assignments.
FirstMap first_map(const MapSpace& space, Modulus m, std::uint64_t node_budget);

}  // namespace ffc::kernels
