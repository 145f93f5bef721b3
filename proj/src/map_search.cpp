#include "ffc/map_search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "ffc/algebra.hpp"

namespace ffc::kernels {

namespace {

constexpr std::uint64_t kTargetBlocks = 512;

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

class Worker {
 public:
  explicit Worker(const MapSpace& space)
      : space_(space),
        rows_(space.rows() * space.cols(), 0),
        choices_(space.active_edges().size(), 0),
        running_(space.active_edges().size() + 1, 0) {}

  void place(std::size_t depth, EdgeIndex h) {
    choices_[depth] = h;
    add(depth, h, 1);
    running_[depth + 1] = fold(depth, running_[depth]);
  }

  void unplace(std::size_t depth) { add(depth, choices_[depth], -1); }

  /// gcd of all rows finalized by the first `depth` placements.
  std::uint64_t running_gcd(std::size_t depth) const { return running_[depth]; }
  std::span<const EdgeIndex> choices() const { return choices_; }

 private:
  void add(std::size_t depth, EdgeIndex h, std::int64_t sign) {
    const std::size_t cols = space_.cols();
    std::int64_t* tail_row = rows_.data() + space_.tail(depth) * cols;
    std::int64_t* head_row = rows_.data() + space_.head(depth) * cols;
    for (const auto& t : space_.circuit_terms(h)) {
      tail_row[t.col] += sign * t.coef;
      head_row[t.col] -= sign * t.coef;
    }
  }

  std::uint64_t fold(std::size_t depth, std::uint64_t g) const {
    const std::size_t cols = space_.cols();
    for (Vertex v : space_.finalized_at(depth)) {
      const std::int64_t* row = rows_.data() + v * cols;
      for (std::size_t c = 0; c < cols; ++c) {
        g = std::gcd(g, abs_u64(row[c]));
        if (g == 1) return 1;
      }
    }
    return g;
  }

  const MapSpace& space_;
  std::vector<std::int64_t> rows_;
  std::vector<EdgeIndex> choices_;
  std::vector<std::uint64_t> running_;
};

// Visitor protocol:
//   stop()          abandon remaining work
//   enter(g, depth) descend into the subtree whose running gcd is g?
//   leaf(worker)    a complete map (running gcd at full depth is its gcd)
template <class Visitor>
void descend(const MapSpace& space, Worker& w, std::size_t depth, Visitor& vis) {
  const std::size_t n = space.active_edges().size();
  if (depth == n) {
    vis.leaf(w);
    return;
  }
  for (EdgeIndex h = 0; h < space.target_edges(); ++h) {
    if (vis.stop()) return;
    w.place(depth, h);
    if (vis.enter(w.running_gcd(depth + 1), depth + 1)) descend(space, w, depth + 1, vis);
    w.unplace(depth);
  }
}

std::size_t prefix_depth(const MapSpace& space) {
  std::size_t k = 0;
  std::uint64_t blocks = 1;
  const std::size_t n = space.active_edges().size();
  while (k < n && blocks < kTargetBlocks && space.target_edges() > 1) {
    blocks *= space.target_edges();
    ++k;
  }
  return k;
}

template <class MakeVisitor, class Merge>
void run_blocks(const MapSpace& space, MakeVisitor make, Merge merge) {
  const std::size_t k = prefix_depth(space);
  const std::uint64_t width = space.target_edges();
  const auto blocks = static_cast<std::int64_t>(saturating_pow(width, k));
#pragma omp parallel
  {
    Worker w(space);
    auto vis = make();
    std::vector<EdgeIndex> digits(k);
#pragma omp for schedule(dynamic)
    for (std::int64_t b = 0; b < blocks; ++b) {
      if (vis.stop()) continue;
      auto rest = static_cast<std::uint64_t>(b);
      for (std::size_t d = k; d-- > 0;) {
        digits[d] = rest % width;
        rest /= width;
      }
      for (std::size_t d = 0; d < k; ++d) w.place(d, digits[d]);
      if (vis.enter(w.running_gcd(k), k)) descend(space, w, k, vis);
      for (std::size_t d = k; d-- > 0;) w.unplace(d);
    }
#pragma omp critical
    merge(vis);
  }
}

}  // namespace

MapSpace::MapSpace(const MultiDigraph& source, const MultiDigraph& target)
    : source_edges_(source.edge_count()),
      target_edges_(target.edge_count()),
      rows_(source.vertex_count()) {
  const auto circuits = spanning_structure(target).fundamental_circuits;
  cols_ = circuits.size();
  term_offset_.push_back(0);
  for (EdgeIndex h = 0; h < target_edges_; ++h) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (circuits[c][h] != 0) {
        terms_.push_back({static_cast<std::uint32_t>(c), static_cast<std::int32_t>(circuits[c][h])});
      }
    }
    term_offset_.push_back(terms_.size());
  }

  std::vector<std::size_t> last_depth(rows_, static_cast<std::size_t>(-1));
  for (EdgeIndex e = 0; e < source_edges_; ++e) {
    const Edge& edge = source.edge(e);
    if (edge.is_loop()) continue;
    last_depth[edge.tail] = last_depth[edge.head] = active_.size();
    active_.push_back(e);
    tails_.push_back(edge.tail);
    heads_.push_back(edge.head);
  }
  finalized_.resize(active_.size());
  for (Vertex v = 0; v < rows_; ++v) {
    if (last_depth[v] != static_cast<std::size_t>(-1)) finalized_[last_depth[v]].push_back(v);
  }
}

std::uint64_t MapSpace::map_count() const { return saturating_pow(target_edges_, source_edges_); }

std::uint64_t MapSpace::free_multiplicity() const { return saturating_pow(target_edges_, free_edges()); }

std::vector<EdgeIndex> MapSpace::expand(std::span<const EdgeIndex> choices) const {
  std::vector<EdgeIndex> assignment(source_edges_, 0);
  for (std::size_t d = 0; d < active_.size(); ++d) assignment[active_[d]] = choices[d];
  return assignment;
}

FFSet ff_set(const MapSpace& space) {
  if (space.map_count() == 0) return {};
  const std::size_t n = space.active_edges().size();
  std::atomic<bool> found_all{false};

  struct Visitor {
    std::atomic<bool>* found_all;
    std::size_t full_depth;
    FFSet local;

    bool stop() const { return found_all->load(std::memory_order_relaxed); }
    bool enter(std::uint64_t g, std::size_t) const { return g == 0 || !local.contains(g); }
    void leaf(const Worker& w) {
      const auto g = w.running_gcd(full_depth);
      if (g == 0) found_all->store(true, std::memory_order_relaxed);
      local.insert_gcd(g);
    }
  };

  FFSet result;
  run_blocks(
      space, [&] { return Visitor{&found_all, n, {}}; }, [&](const Visitor& v) { result.unite(v.local); });
  return found_all ? FFSet::all() : result;
}

std::uint64_t count(const MapSpace& space, Modulus m) {
  if (space.map_count() == 0) return 0;
  if (m == Modulus::cyclic(1)) return space.map_count();
  const std::size_t n = space.active_edges().size();

  struct Visitor {
    Modulus m;
    std::size_t full_depth;
    std::uint64_t hits = 0;

    bool stop() const { return false; }
    bool enter(std::uint64_t g, std::size_t) const { return m.divides_gcd(g); }
    void leaf(const Worker& w) { hits += m.divides_gcd(w.running_gcd(full_depth)); }
  };

  std::uint64_t hits = 0;
  run_blocks(
      space, [&] { return Visitor{m, n}; }, [&](const Visitor& v) { hits += v.hits; });
  return checked_mul(hits, space.free_multiplicity());
}

EquivalenceScan equivalence_scan(const MapSpace& space, std::span<const std::uint64_t> moduli, std::size_t keep) {
  EquivalenceScan scan;
  if (space.map_count() == 0) return scan;
  const std::size_t n = space.active_edges().size();
  const std::vector<std::uint64_t> mods(moduli.begin(), moduli.end());

  struct Visitor {
    const MapSpace* space;
    const std::vector<std::uint64_t>* mods;
    std::size_t full_depth;
    std::size_t keep;
    EquivalenceScan local;

    bool stop() const { return false; }
    bool any_divides(std::uint64_t g) const {
      return std::any_of(mods->begin(), mods->end(), [g](std::uint64_t m) { return g % m == 0; });
    }
    bool enter(std::uint64_t g, std::size_t depth) {
      if (g == 0 || any_divides(g)) return true;
      local.maps_checked += saturating_pow(space->target_edges(), full_depth - depth);
      return false;
    }
    void leaf(const Worker& w) {
      ++local.maps_checked;
      const auto g = w.running_gcd(full_depth);
      if (g == 0 || !any_divides(g)) return;
      ++local.violating_maps;
      for (auto m : *mods) {
        if (g % m == 0) local.violations.push_back({space->expand(w.choices()), m, g});
      }
      if (local.violations.size() > 4 * keep + 16) trim();
    }
    void trim() {
      std::sort(local.violations.begin(), local.violations.end());
      if (local.violations.size() > keep) local.violations.resize(keep);
    }
  };

  run_blocks(
      space, [&] { return Visitor{&space, &mods, n, keep, {}}; },
      [&](const Visitor& v) {
        scan.maps_checked += v.local.maps_checked;
        scan.violating_maps += v.local.violating_maps;
        scan.violations.insert(scan.violations.end(), v.local.violations.begin(), v.local.violations.end());
      });
  std::sort(scan.violations.begin(), scan.violations.end());
  if (scan.violations.size() > keep) scan.violations.resize(keep);
  scan.maps_checked = checked_mul(scan.maps_checked, space.free_multiplicity());
  scan.violating_maps = checked_mul(scan.violating_maps, space.free_multiplicity());
  return scan;
}

FirstMap first_map(const MapSpace& space, Modulus m, std::uint64_t node_budget) {
  FirstMap out;
  if (space.map_count() == 0) return out;
  const std::size_t n = space.active_edges().size();

  struct Visitor {
    Modulus m;
    std::size_t full_depth;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool found = false;
    std::vector<EdgeIndex> choices;

    bool stop() const { return found || exhausted; }
    bool enter(std::uint64_t g, std::size_t) {
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      return m.divides_gcd(g);
    }
    void leaf(const Worker& w) {
      if (!m.divides_gcd(w.running_gcd(full_depth))) return;
      found = true;
      choices.assign(w.choices().begin(), w.choices().end());
    }
  };

  Worker w(space);
  Visitor vis{m, n, node_budget, 0, false, false, {}};
  descend(space, w, 0, vis);
  out.nodes_visited = std::min(vis.nodes, node_budget);
  if (vis.found) {
    out.status = SearchStatus::found;
    out.assignment = space.expand(vis.choices);
  } else if (vis.exhausted) {
    out.status = SearchStatus::unknown;
  }
  return out;
}

}  // namespace ffc::kernels
