#pragma once

// Deciding FF_n / FF_Z / FF_M for a single edge map.
//
// Every Z_n-tension of G is a combination of star tensions, and a vector is a
// Z_n-tension of H exactly when its signed sum around each fundamental circuit
// of H vanishes mod n. So f is FF_n iff n divides every entry of the
// discrepancy matrix d(v, C) = <circuit C, image of star_tension(v)>, i.e.
// iff n | g where g is the gcd of all entries. g = 0 means FF_Z.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/flows.hpp"
#include "ffc/graph.hpp"

namespace ffc {

/// A total map E(source) -> E(target).
class EdgeMap {
 public:
  EdgeMap(MultiDigraph source, MultiDigraph target, std::vector<EdgeIndex> assignment);

  const MultiDigraph& source() const { return source_; }
  const MultiDigraph& target() const { return target_; }
  const std::vector<EdgeIndex>& assignment() const { return assignment_; }
  EdgeIndex operator()(EdgeIndex e) const { return assignment_[e]; }

 private:
  MultiDigraph source_;
  MultiDigraph target_;
  std::vector<EdgeIndex> assignment_;
};

/// One target index per line; text after '#' ignored.
EdgeMap parse_edge_map(std::string_view text, MultiDigraph source, MultiDigraph target);
std::string to_text(const EdgeMap& f);

/// Either Z_n (n >= 1) or Z itself.
class Modulus {
 public:
  static Modulus cyclic(std::uint64_t n);
  static Modulus integers() { return Modulus(0); }
  static Modulus of(const Exponent& e) { return e.is_infinite() ? integers() : cyclic(e.value()); }

  bool is_integers() const { return n_ == 0; }
  /// 0 encodes Z.
  std::uint64_t raw() const { return n_; }
  bool divides(std::int64_t value) const;
  /// Whether every multiple of g (g = 0 meaning "only 0") is divisible.
  bool divides_gcd(std::uint64_t g) const { return n_ == 0 ? g == 0 : g % n_ == 0; }
  std::string to_string() const { return n_ == 0 ? "Z" : std::to_string(n_); }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  explicit Modulus(std::uint64_t n) : n_(n) {}
  std::uint64_t n_;
};

/// tau_f(e) = sum of tau over the preimage of e.
SignedEdgeVector algebraic_image(const EdgeMap& f, const SignedEdgeVector& tau);

class DiscrepancyMatrix {
 public:
  DiscrepancyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(Vertex v, std::size_t circuit) { return data_[v * cols_ + circuit]; }
  std::int64_t at(Vertex v, std::size_t circuit) const { return data_[v * cols_ + circuit]; }
  const std::vector<std::int64_t>& entries() const { return data_; }
  bool is_zero() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Rows: vertices of the source; columns: fundamental circuits of the target.
DiscrepancyMatrix discrepancy(const EdgeMap& f);
std::uint64_t ff_gcd(const EdgeMap& f);

struct FailureCertificate {
  Vertex vertex = 0;
  std::size_t circuit = 0;
  std::int64_t value = 0;
  Modulus modulus = Modulus::integers();
};

struct Decision {
  bool holds = true;
  std::optional<FailureCertificate> certificate;  // first failing entry, row-major
  explicit operator bool() const { return holds; }
};

Decision decide(const EdgeMap& f, Modulus m);
Decision is_ff_n(const EdgeMap& f, std::uint64_t n);
bool is_ff_Z(const EdgeMap& f);
bool is_ff_group(const EdgeMap& f, const GroupSpec& m);

struct OracleVerdict {
  bool holds = true;
  std::optional<GroupVector> refuting_flow;  // a flow on the target whose pullback is not a flow
};

/// Literal definition: pull back every M-flow of the target. Finite M only.
OracleVerdict oracle_is_ff_group(const EdgeMap& f, const GroupSpec& m, std::uint64_t budget = kDefaultFlowBudget);

/// Every target flow whose pullback is not a flow, in stream order.
std::vector<GroupVector> refuting_flows(const EdgeMap& f, const GroupSpec& m,
                                        std::uint64_t budget = kDefaultFlowBudget);

/// True iff phi is an M-flow on the target and phi o f is not one on the source.
bool refutes(const EdgeMap& f, const GroupVector& phi, const GroupSpec& m);

/// phi o f as a vector on the source's edges.
GroupVector pull_back(const EdgeMap& f, const GroupVector& phi);

}  // namespace ffc
