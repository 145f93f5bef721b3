#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffc/decide.hpp"
#include "ffc/ffset.hpp"
#include "ffc/graph.hpp"

namespace ffc {

/// A set of digon multiplicities, realized as the disjoint union of
/// digon(a) in the stored order (component i on vertices 2i -> 2i+1).
class DigonFamily {
 public:
  /// Duplicates are dropped (first occurrence kept); must be nonempty and >= 1.
  explicit DigonFamily(std::vector<std::uint64_t> multiplicities);

  const std::vector<std::uint64_t>& multiplicities() const { return multiplicities_; }
  std::uint64_t max() const;
  std::size_t edge_count() const;
  MultiDigraph graph() const;

 private:
  std::vector<std::uint64_t> multiplicities_;
};

/// Recognizes the canonical union layout produced by DigonFamily::graph().
std::optional<DigonFamily> as_digon_family(const MultiDigraph& g);

/// FF(G,H) for digon unions: n is a member iff every a in A lies in the
/// integer cone of B u {n}; all of N iff A lies in the cone of B.
FFSet ff_set_digons(const DigonFamily& a, const DigonFamily& b);

/// a = sum(parts) + multiples * n with the fewest parts, ties broken by the
/// lexicographically smallest ascending parts list.
struct ConeDecomposition {
  std::vector<std::uint64_t> parts;
  std::uint64_t multiples = 0;

  friend bool operator==(const ConeDecomposition&, const ConeDecomposition&) = default;
};

std::optional<ConeDecomposition> cone_decomposition(std::uint64_t a, std::span<const std::uint64_t> generators,
                                                    std::uint64_t n);

class ConeError : public std::invalid_argument {
 public:
  ConeError(std::uint64_t offending, const std::string& what)
      : std::invalid_argument(what), offending_(offending) {}
  std::uint64_t offending() const { return offending_; }

 private:
  std::uint64_t offending_;
};

/// The explicit FF_n map between digon unions: for each D_a, the first c*n
/// edges go to target edge 0, then each part b takes the next b edges
/// bijectively onto D_b. Throws ConeError when some a has no decomposition.
EdgeMap digon_ff_map(const DigonFamily& a, const DigonFamily& b, std::uint64_t n);
/// Z is accepted too: then only the bijective parts are used.
EdgeMap digon_ff_map(const DigonFamily& a, const DigonFamily& b, Modulus n);

struct WitnessPlan {
  std::vector<std::uint64_t> t;          // divisibility-maximal, ascending
  std::optional<std::uint64_t> p;        // prime > 4 max T
  std::optional<std::uint64_t> p_prime;  // smallest integer above 1.25 p
  std::vector<std::uint64_t> a;          // {p, p'}
  std::vector<std::uint64_t> b;          // {p - t} then {p' - t}
};

struct Witness {
  MultiDigraph g;
  MultiDigraph h;
  WitnessPlan plan;
};

/// A pair (G, H) with FF(G,H) equal to the divisor down-closure of T.
Witness build_witness(std::span<const std::uint64_t> t);

struct WitnessCheck {
  FFSet expected;
  FFSet computed;
  bool pass = false;
};

WitnessCheck verify_witness(const WitnessPlan& plan);

}  // namespace ffc
