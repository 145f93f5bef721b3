#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/graph.hpp"

namespace ffc {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on vectors produced by one flow enumeration.
inline constexpr std::uint64_t kDefaultFlowBudget = 10'000'000;

/// One group element per edge. An element is `width` integers: unbounded
/// coordinates for the free factors, then residues for the cyclic factors.
class GroupVector {
 public:
  GroupVector() = default;
  GroupVector(std::size_t edge_count, std::size_t width)
      : edge_count_(edge_count), width_(width), data_(edge_count * width, 0) {}

  /// Single-coordinate vector (cyclic or free group of width 1).
  static GroupVector from_scalars(std::span<const std::int64_t> values);

  std::size_t edge_count() const { return edge_count_; }
  std::size_t width() const { return width_; }

  std::span<std::int64_t> at(EdgeIndex e) { return {data_.data() + e * width_, width_}; }
  std::span<const std::int64_t> at(EdgeIndex e) const { return {data_.data() + e * width_, width_}; }

  bool is_zero_at(EdgeIndex e) const;

  friend bool operator==(const GroupVector&, const GroupVector&) = default;
  friend auto operator<=>(const GroupVector&, const GroupVector&) = default;

 private:
  std::size_t edge_count_ = 0;
  std::size_t width_ = 0;
  std::vector<std::int64_t> data_;
};

/// +1 on edges leaving v, -1 on edges entering v, 0 on loops.
SignedEdgeVector star_tension(const MultiDigraph& g, Vertex v);

/// Kirchhoff's law at every vertex.
bool is_flow(const MultiDigraph& g, const GroupVector& phi, const GroupSpec& m);
/// Same predicate phrased as orthogonality to every star tension.
bool is_flow_by_duality(const MultiDigraph& g, const GroupVector& phi, const GroupSpec& m);
/// Signed sum over every fundamental circuit vanishes.
bool is_tension(const MultiDigraph& g, const GroupVector& tau, const GroupSpec& m);

/// All M-flows as M-combinations of the fundamental circuits, lexicographic
/// over the coefficient tuple (circuit-major, factors in the given order).
class FlowStream {
 public:
  FlowStream(const MultiDigraph& g, const GroupSpec& m, std::uint64_t budget = kDefaultFlowBudget);

  /// Advances to the next flow; false once exhausted.
  bool next();
  const GroupVector& current() const { return current_; }
  std::uint64_t size() const { return total_; }

 private:
  std::vector<std::uint64_t> orders_;
  std::vector<SignedEdgeVector> circuits_;
  std::vector<std::uint64_t> digits_;  // circuit-major, factor-minor
  GroupVector current_;
  std::uint64_t total_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Oracle: every vector of M^|E| that passes is_flow, in lexicographic order.
class FilteredFlowStream {
 public:
  FilteredFlowStream(const MultiDigraph& g, const GroupSpec& m, std::uint64_t budget = kDefaultFlowBudget);

  bool next();
  const GroupVector& current() const { return current_; }

 private:
  bool advance();

  const MultiDigraph* graph_;
  GroupSpec group_;
  GroupVector current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<GroupVector> enumerate_flows(const MultiDigraph& g, const GroupSpec& m,
                                         std::uint64_t budget = kDefaultFlowBudget);
std::vector<GroupVector> filter_flows(const MultiDigraph& g, const GroupSpec& m,
                                      std::uint64_t budget = kDefaultFlowBudget);

std::uint64_t count_nowhere_zero_flows(const MultiDigraph& g, const GroupSpec& m,
                                       std::uint64_t budget = kDefaultFlowBudget);

}  // namespace ffc
