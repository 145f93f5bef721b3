#include "ffc/decide.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ffc {

EdgeMap::EdgeMap(MultiDigraph source, MultiDigraph target, std::vector<EdgeIndex> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.edge_count()) {
    throw std::invalid_argument("edge map has " + std::to_string(assignment_.size()) + " entries, source has " +
                                std::to_string(source_.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= target_.edge_count()) {
      throw std::invalid_argument("edge map sends edge " + std::to_string(i) + " to " +
                                  std::to_string(assignment_[i]) + ", target has " +
                                  std::to_string(target_.edge_count()) + " edges");
    }
  }
}

EdgeMap parse_edge_map(std::string_view text, MultiDigraph source, MultiDigraph target) {
  std::vector<EdgeIndex> assignment;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    EdgeIndex value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw std::invalid_argument("map line " + std::to_string(line_no) + ": expected one edge index");
    }
    assignment.push_back(value);
  }
  return EdgeMap(std::move(source), std::move(target), std::move(assignment));
}

std::string to_text(const EdgeMap& f) {
  std::ostringstream out;
  for (auto h : f.assignment()) out << h << '\n';
  return out.str();
}

Modulus Modulus::cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be >= 1 (use Modulus::integers() for Z)");
  return Modulus(n);
}

bool Modulus::divides(std::int64_t value) const {
  if (n_ == 0) return value == 0;
  const auto a = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
  return a % n_ == 0;
}

SignedEdgeVector algebraic_image(const EdgeMap& f, const SignedEdgeVector& tau) {
  if (tau.size() != f.source().edge_count()) {
    throw std::invalid_argument("vector has " + std::to_string(tau.size()) + " entries, source has " +
                                std::to_string(f.source().edge_count()) + " edges");
  }
  SignedEdgeVector image(f.target().edge_count(), 0);
  for (EdgeIndex e = 0; e < tau.size(); ++e) image[f(e)] += tau[e];
  return image;
}

bool DiscrepancyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

DiscrepancyMatrix discrepancy(const EdgeMap& f) {
  const auto circuits = spanning_structure(f.target()).fundamental_circuits;
  DiscrepancyMatrix d(f.source().vertex_count(), circuits.size());
  for (Vertex v = 0; v < f.source().vertex_count(); ++v) {
    const auto image = algebraic_image(f, star_tension(f.source(), v));
    for (std::size_t c = 0; c < circuits.size(); ++c) {
      std::int64_t sum = 0;
      for (EdgeIndex e = 0; e < image.size(); ++e) sum += circuits[c][e] * image[e];
      d.at(v, c) = sum;
    }
  }
  return d;
}

std::uint64_t ff_gcd(const EdgeMap& f) { return gcd_all(discrepancy(f).entries()); }

Decision decide(const EdgeMap& f, Modulus m) {
  const auto d = discrepancy(f);
  for (Vertex v = 0; v < d.rows(); ++v) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (!m.divides(d.at(v, c))) return {false, FailureCertificate{v, c, d.at(v, c), m}};
    }
  }
  return {};
}

Decision is_ff_n(const EdgeMap& f, std::uint64_t n) { return decide(f, Modulus::cyclic(n)); }

bool is_ff_Z(const EdgeMap& f) { return ff_gcd(f) == 0; }

bool is_ff_group(const EdgeMap& f, const GroupSpec& m) {
  const auto e = exponent(m);
  return e.is_infinite() ? is_ff_Z(f) : is_ff_n(f, e.value()).holds;
}

GroupVector pull_back(const EdgeMap& f, const GroupVector& phi) {
  if (phi.edge_count() != f.target().edge_count()) {
    throw std::invalid_argument("flow dimension does not match the target graph");
  }
  GroupVector out(f.source().edge_count(), phi.width());
  for (EdgeIndex e = 0; e < out.edge_count(); ++e) {
    auto src = phi.at(f(e));
    std::copy(src.begin(), src.end(), out.at(e).begin());
  }
  return out;
}

namespace {

// Calls visit(phi) for each target flow whose pullback is not a flow, until
// visit returns false.
template <typename Visit>
void for_each_refuting_flow(const EdgeMap& f, const GroupSpec& m, std::uint64_t budget, Visit visit) {
  if (!m.is_finite()) throw AlgebraError("the flow oracle needs a finite group, got " + m.to_string());
  const auto& g = f.source();
  const std::size_t k = m.width();
  std::vector<std::int64_t> balance(g.vertex_count() * k);
  FlowStream flows(f.target(), m, budget);
  while (flows.next()) {
    const auto& phi = flows.current();
    std::fill(balance.begin(), balance.end(), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      auto x = phi.at(f(e));
      for (std::size_t j = 0; j < k; ++j) {
        balance[edge.tail * k + j] += x[j];
        balance[edge.head * k + j] -= x[j];
      }
    }
    for (std::size_t i = 0; i < balance.size(); ++i) {
      if (balance[i] % static_cast<std::int64_t>(m.cyclic_orders[i % k]) != 0) {
        if (!visit(phi)) return;
        break;
      }
    }
  }
}

}  // namespace

OracleVerdict oracle_is_ff_group(const EdgeMap& f, const GroupSpec& m, std::uint64_t budget) {
  OracleVerdict verdict;
  for_each_refuting_flow(f, m, budget, [&](const GroupVector& phi) {
    verdict = {false, phi};
    return false;
  });
  return verdict;
}

std::vector<GroupVector> refuting_flows(const EdgeMap& f, const GroupSpec& m, std::uint64_t budget) {
  std::vector<GroupVector> out;
  for_each_refuting_flow(f, m, budget, [&](const GroupVector& phi) {
    out.push_back(phi);
    return true;
  });
  return out;
}

bool refutes(const EdgeMap& f, const GroupVector& phi, const GroupSpec& m) {
  return is_flow(f.target(), phi, m) && !is_flow(f.source(), pull_back(f, phi), m);
}

}  // namespace ffc
