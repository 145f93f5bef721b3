#include "ffc/flows.hpp"

#include <algorithm>
#include <string>

namespace ffc {

namespace {

using Wide = __int128;

// Modulus per coordinate; 0 marks a free (integer) coordinate.
std::vector<std::uint64_t> coordinate_moduli(const GroupSpec& m) {
  std::vector<std::uint64_t> mods(m.free_rank, 0);
  mods.insert(mods.end(), m.cyclic_orders.begin(), m.cyclic_orders.end());
  return mods;
}

void check_vector(const MultiDigraph& g, const GroupVector& v, const GroupSpec& m) {
  if (v.edge_count() != g.edge_count()) {
    throw std::invalid_argument("group vector has " + std::to_string(v.edge_count()) + " entries, graph has " +
                                std::to_string(g.edge_count()) + " edges");
  }
  if (v.width() != m.width()) {
    throw std::invalid_argument("group vector width " + std::to_string(v.width()) + " does not match " +
                                m.to_string());
  }
  auto mods = coordinate_moduli(m);
  for (EdgeIndex e = 0; e < v.edge_count(); ++e) {
    auto x = v.at(e);
    for (std::size_t j = 0; j < mods.size(); ++j) {
      if (mods[j] != 0 && (x[j] < 0 || static_cast<std::uint64_t>(x[j]) >= mods[j])) {
        throw std::invalid_argument("entry on edge " + std::to_string(e) + " is not a residue of " +
                                    m.to_string());
      }
    }
  }
}

bool vanishes(Wide s, std::uint64_t mod) {
  if (mod == 0) return s == 0;
  return s % static_cast<Wide>(mod) == 0;
}

std::uint64_t finite_total(const GroupSpec& m, std::size_t exponent, std::uint64_t budget, const char* what) {
  if (!m.is_finite()) throw AlgebraError(std::string(what) + " needs a finite group, got " + m.to_string());
  auto total = saturating_pow(m.order(), exponent);
  if (total > budget) {
    throw BudgetExceeded(std::string(what) + ": " + m.to_string() + "^" + std::to_string(exponent) +
                         " vectors exceed the budget of " + std::to_string(budget));
  }
  return total;
}

}  // namespace

GroupVector GroupVector::from_scalars(std::span<const std::int64_t> values) {
  GroupVector v(values.size(), 1);
  std::copy(values.begin(), values.end(), v.data_.begin());
  return v;
}

bool GroupVector::is_zero_at(EdgeIndex e) const {
  auto x = at(e);
  return std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; });
}

SignedEdgeVector star_tension(const MultiDigraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  SignedEdgeVector tau(g.edge_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    if (edge.tail == v) tau[e] = 1;
    if (edge.head == v) tau[e] = -1;
  }
  return tau;
}

bool is_flow(const MultiDigraph& g, const GroupVector& phi, const GroupSpec& m) {
  check_vector(g, phi, m);
  const std::size_t k = m.width();
  auto mods = coordinate_moduli(m);
  std::vector<Wide> balance(g.vertex_count() * k, 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    auto x = phi.at(e);
    for (std::size_t j = 0; j < k; ++j) {
      balance[edge.tail * k + j] += x[j];
      balance[edge.head * k + j] -= x[j];
    }
  }
  for (std::size_t i = 0; i < balance.size(); ++i) {
    if (!vanishes(balance[i], mods[i % k])) return false;
  }
  return true;
}

bool is_flow_by_duality(const MultiDigraph& g, const GroupVector& phi, const GroupSpec& m) {
  check_vector(g, phi, m);
  auto mods = coordinate_moduli(m);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto tau = star_tension(g, v);
    for (std::size_t j = 0; j < mods.size(); ++j) {
      Wide dot = 0;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) dot += static_cast<Wide>(tau[e]) * phi.at(e)[j];
      if (!vanishes(dot, mods[j])) return false;
    }
  }
  return true;
}

bool is_tension(const MultiDigraph& g, const GroupVector& tau, const GroupSpec& m) {
  check_vector(g, tau, m);
  auto mods = coordinate_moduli(m);
  for (const auto& circuit : spanning_structure(g).fundamental_circuits) {
    for (std::size_t j = 0; j < mods.size(); ++j) {
      Wide sum = 0;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) sum += static_cast<Wide>(circuit[e]) * tau.at(e)[j];
      if (!vanishes(sum, mods[j])) return false;
    }
  }
  return true;
}

FlowStream::FlowStream(const MultiDigraph& g, const GroupSpec& m, std::uint64_t budget)
    : orders_(m.cyclic_orders),
      circuits_(spanning_structure(g).fundamental_circuits),
      current_(g.edge_count(), m.width()) {
  total_ = finite_total(m, circuits_.size(), budget, "flow enumeration");
  digits_.assign(circuits_.size() * orders_.size(), 0);
}

bool FlowStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  const std::size_t k = orders_.size();
  for (std::size_t d = digits_.size(); d-- > 0;) {
    const std::size_t circuit = d / k;
    const std::size_t factor = d % k;
    const auto n = static_cast<std::int64_t>(orders_[factor]);
    const auto& c = circuits_[circuit];
    for (EdgeIndex e = 0; e < c.size(); ++e) {
      if (c[e] == 0) continue;
      auto& x = current_.at(e)[factor];
      x = ((x + c[e]) % n + n) % n;
    }
    // After n additions the coordinate is back where it started.
    if (++digits_[d] < orders_[factor]) return true;
    digits_[d] = 0;
  }
  done_ = true;
  return false;
}

FilteredFlowStream::FilteredFlowStream(const MultiDigraph& g, const GroupSpec& m, std::uint64_t budget)
    : graph_(&g), group_(m), current_(g.edge_count(), m.width()) {
  finite_total(m, g.edge_count(), budget, "flow filtering");
}

bool FilteredFlowStream::advance() {
  const auto& orders = group_.cyclic_orders;
  const std::size_t k = orders.size();
  for (std::size_t d = current_.edge_count() * k; d-- > 0;) {
    auto& x = current_.at(d / k)[d % k];
    if (static_cast<std::uint64_t>(++x) < orders[d % k]) return true;
    x = 0;
  }
  return false;
}

bool FilteredFlowStream::next() {
  while (!done_) {
    if (started_ && !advance()) {
      done_ = true;
      break;
    }
    started_ = true;
    if (is_flow(*graph_, current_, group_)) return true;
  }
  return false;
}

std::vector<GroupVector> enumerate_flows(const MultiDigraph& g, const GroupSpec& m, std::uint64_t budget) {
  std::vector<GroupVector> out;
  FlowStream stream(g, m, budget);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

std::vector<GroupVector> filter_flows(const MultiDigraph& g, const GroupSpec& m, std::uint64_t budget) {
  std::vector<GroupVector> out;
  FilteredFlowStream stream(g, m, budget);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

std::uint64_t count_nowhere_zero_flows(const MultiDigraph& g, const GroupSpec& m, std::uint64_t budget) {
  std::uint64_t count = 0;
  FlowStream stream(g, m, budget);
  while (stream.next()) {
    const auto& phi = stream.current();
    bool nowhere_zero = true;
    for (EdgeIndex e = 0; e < g.edge_count() && nowhere_zero; ++e) nowhere_zero = !phi.is_zero_at(e);
    count += nowhere_zero;
  }
  return count;
}

}  // namespace ffc
