#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ffc {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

/// Integer coefficient per edge index (dense).
using SignedEdgeVector = std::vector<std::int64_t>;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite multidigraph. Edges are identified by their position; loops and
/// parallel edges are allowed. Immutable once constructed.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  MultiDigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Loops count twice.
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  std::size_t component_count() const;
  /// |E| - |V| + components.
  std::size_t cyclomatic_number() const;

  MultiDigraph with_reversed_edge(EdgeIndex e) const;

  friend bool operator==(const MultiDigraph&, const MultiDigraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Parses "V E" followed by E lines "tail head". Text after '#' is ignored.
MultiDigraph parse_digraph(std::string_view text);
std::string to_text(const MultiDigraph& g);

MultiDigraph digon(std::size_t k);
MultiDigraph dicycle(std::size_t k);
MultiDigraph loop_graph();
MultiDigraph k4();
MultiDigraph petersen();

/// name in {digon, dicycle, loop, k4, petersen}; digon and dicycle need k >= 1,
/// the others take no k.
MultiDigraph builtin(std::string_view name, std::optional<std::int64_t> k = std::nullopt);

/// "name" or "name:k", comma-separated for a disjoint union ("digon:9,digon:4").
MultiDigraph parse_builtin_spec(std::string_view spec);

MultiDigraph disjoint_union(std::span<const MultiDigraph> parts);

struct SpanningStructure {
  std::vector<bool> in_forest;                      // per edge
  std::vector<EdgeIndex> forest_edges;              // ascending
  std::vector<EdgeIndex> circuit_edges;             // non-forest edge owning circuit i
  std::vector<SignedEdgeVector> fundamental_circuits;

  friend bool operator==(const SpanningStructure&, const SpanningStructure&) = default;
};

/// Forest grown greedily in edge-index order. Circuit i runs along its
/// non-forest edge (coefficient +1) from tail to head, then back to the tail
/// through the forest; forest edges traversed forward get +1, backward -1.
SpanningStructure spanning_structure(const MultiDigraph& g);

}  // namespace ffc
