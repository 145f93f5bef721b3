#include "ffc/sampling.hpp"

namespace ffc {

MultiDigraph random_digraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t min_edges,
                            std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> vertex_count(1, max_vertices);
  std::uniform_int_distribution<std::size_t> edge_count(min_edges, max_edges);
  const std::size_t n = vertex_count(rng);
  const std::size_t m = edge_count(rng);
  std::uniform_int_distribution<std::size_t> endpoint(0, n - 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    Vertex tail = endpoint(rng);
    Vertex head = endpoint(rng);
    edges.push_back({tail, head});
  }
  return MultiDigraph(n, std::move(edges));
}

EdgeMap random_edge_map(std::mt19937_64& rng, const MultiDigraph& source, const MultiDigraph& target) {
  std::vector<EdgeIndex> assignment(source.edge_count(), 0);
  if (!assignment.empty()) {
    if (target.edge_count() == 0) throw std::invalid_argument("no map into an edgeless graph");
    std::uniform_int_distribution<EdgeIndex> pick(0, target.edge_count() - 1);
    for (auto& a : assignment) a = pick(rng);
  }
  return EdgeMap(source, target, std::move(assignment));
}

}  // namespace ffc
