#include "ffc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

namespace ffc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw GraphError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

MultiDigraph::MultiDigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].tail >= vertex_count_ || edges_[i].head >= vertex_count_) {
      throw GraphError("edge " + std::to_string(i) + ": vertex index out of range (vertex count " +
                       std::to_string(vertex_count_) + ")");
    }
  }
}

std::size_t MultiDigraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

std::size_t MultiDigraph::max_degree() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::size_t MultiDigraph::component_count() const {
  UnionFind uf(vertex_count_);
  std::size_t components = vertex_count_;
  for (const Edge& e : edges_) components -= uf.unite(e.tail, e.head);
  return components;
}

std::size_t MultiDigraph::cyclomatic_number() const {
  return edges_.size() + component_count() - vertex_count_;
}

MultiDigraph MultiDigraph::with_reversed_edge(EdgeIndex e) const {
  auto edges = edges_;
  std::swap(edges.at(e).tail, edges.at(e).head);
  return MultiDigraph(vertex_count_, std::move(edges));
}

MultiDigraph parse_digraph(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto toks = split_ws(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw GraphError("line " + std::to_string(line_no) + ": expected two integers");
    }
    std::size_t a = parse_index(toks[0], line_no);
    std::size_t b = parse_index(toks[1], line_no);
    if (!header) {
      header.emplace(a, b);
      continue;
    }
    if (edges.size() == header->second) {
      throw GraphError("line " + std::to_string(line_no) + ": more edges than the header declares");
    }
    if (a >= header->first || b >= header->first) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex index out of range");
    }
    edges.push_back({a, b});
  }
  if (!header) throw GraphError("missing 'V E' header");
  if (edges.size() != header->second) {
    throw GraphError("edge count mismatch: header declares " + std::to_string(header->second) +
                     ", found " + std::to_string(edges.size()));
  }
  return MultiDigraph(header->first, std::move(edges));
}

std::string to_text(const MultiDigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

MultiDigraph digon(std::size_t k) {
  return MultiDigraph(2, std::vector<Edge>(k, Edge{0, 1}));
}

MultiDigraph dicycle(std::size_t k) {
  if (k == 0) throw GraphError("dicycle needs k >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return MultiDigraph(k, std::move(edges));
}

MultiDigraph loop_graph() { return MultiDigraph(1, {{0, 0}}); }

MultiDigraph k4() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j) edges.push_back({i, j});
  return MultiDigraph(4, std::move(edges));
}

MultiDigraph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (Vertex i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return MultiDigraph(10, std::move(edges));
}

MultiDigraph builtin(std::string_view name, std::optional<std::int64_t> k) {
  const bool sized = name == "digon" || name == "dicycle";
  const bool fixed = name == "loop" || name == "k4" || name == "petersen";
  if (!sized && !fixed) throw GraphError("unknown builtin graph '" + std::string(name) + "'");
  if (sized) {
    if (!k) throw GraphError(std::string(name) + " needs a size, e.g. " + std::string(name) + ":3");
    if (*k < 1) throw GraphError(std::string(name) + " needs k >= 1");
    auto size = static_cast<std::size_t>(*k);
    return name == "digon" ? digon(size) : dicycle(size);
  }
  if (k) throw GraphError(std::string(name) + " takes no size");
  if (name == "loop") return loop_graph();
  if (name == "k4") return k4();
  return petersen();
}

MultiDigraph parse_builtin_spec(std::string_view spec) {
  std::vector<MultiDigraph> parts;
  std::size_t start = 0;
  while (true) {
    auto end = spec.find(',', start);
    auto item = spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    auto colon = item.find(':');
    std::string_view name = item.substr(0, colon);
    std::optional<std::int64_t> k;
    if (colon != std::string_view::npos) {
      auto digits = item.substr(colon + 1);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw GraphError("invalid size in builtin spec '" + std::string(item) + "'");
      }
      k = value;
    }
    parts.push_back(builtin(name, k));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts.size() == 1 ? parts.front() : disjoint_union(parts);
}

MultiDigraph disjoint_union(std::span<const MultiDigraph> parts) {
  std::size_t offset = 0;
  std::vector<Edge> edges;
  for (const auto& part : parts) {
    for (const Edge& e : part.edges()) edges.push_back({e.tail + offset, e.head + offset});
    offset += part.vertex_count();
  }
  return MultiDigraph(offset, std::move(edges));
}

SpanningStructure spanning_structure(const MultiDigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  SpanningStructure s;
  s.in_forest.assign(m, false);

  UnionFind uf(n);
  std::vector<std::vector<EdgeIndex>> forest_adj(n);
  for (EdgeIndex e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    if (uf.unite(edge.tail, edge.head)) {
      s.in_forest[e] = true;
      s.forest_edges.push_back(e);
      forest_adj[edge.tail].push_back(e);
      forest_adj[edge.head].push_back(e);
    }
  }

  // Root every tree at its lowest vertex; parent_edge[v] leads towards the root.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, kNone);
  std::vector<EdgeIndex> parent_edge(n, kNone);
  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != kNone) continue;
    depth[root] = 0;
    std::queue<Vertex> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      Vertex v = bfs.front();
      bfs.pop();
      for (EdgeIndex e : forest_adj[v]) {
        const Edge& edge = g.edge(e);
        Vertex w = edge.tail == v ? edge.head : edge.tail;
        if (depth[w] != kNone) continue;
        depth[w] = depth[v] + 1;
        parent_edge[w] = e;
        bfs.push(w);
      }
    }
  }

  auto parent_of = [&](Vertex v) {
    const Edge& edge = g.edge(parent_edge[v]);
    return edge.tail == v ? edge.head : edge.tail;
  };

  for (EdgeIndex e = 0; e < m; ++e) {
    if (s.in_forest[e]) continue;
    SignedEdgeVector circuit(m, 0);
    circuit[e] = 1;
    // Walk from head back to tail: head climbs up, tail's half is walked in reverse.
    Vertex a = g.edge(e).head;
    Vertex b = g.edge(e).tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        // step a -> parent(a) traverses parent_edge[a]
        const Edge& pe = g.edge(parent_edge[a]);
        circuit[parent_edge[a]] += pe.tail == a ? 1 : -1;
        a = parent_of(a);
      } else {
        // the walk passes parent(b) -> b on its way to the tail
        const Edge& pe = g.edge(parent_edge[b]);
        circuit[parent_edge[b]] += pe.head == b ? 1 : -1;
        b = parent_of(b);
      }
    }
    s.circuit_edges.push_back(e);
    s.fundamental_circuits.push_back(std::move(circuit));
  }
  return s;
}

}  // namespace ffc
