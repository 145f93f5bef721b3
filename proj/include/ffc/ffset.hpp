#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffc {

/// A set of positive integers closed under taking divisors: either all of N,
/// or the divisors of finitely many maximal elements.
class FFSet {
 public:
  /// The empty set.
  FFSet() = default;

  static FFSet all();
  /// {s : s | t for some t in generators}; zeros are rejected.
  static FFSet down_closure(std::span<const std::uint64_t> generators);
  /// divisors(g), or all of N when g = 0.
  static FFSet from_gcd(std::uint64_t g);

  bool is_all() const { return all_; }
  bool is_empty() const { return !all_ && maximal_.empty(); }
  bool contains(std::uint64_t n) const;
  /// Ascending antichain; empty for all of N.
  const std::vector<std::uint64_t>& maximal_elements() const { return maximal_; }
  /// Every member, ascending. Finite sets only.
  std::vector<std::uint64_t> members() const;

  void insert_gcd(std::uint64_t g);
  void unite(const FFSet& other);

  /// "all" or "{1,2,3,9}".
  std::string to_string() const;

  friend bool operator==(const FFSet&, const FFSet&) = default;

 private:
  void insert_maximal(std::uint64_t x);

  bool all_ = false;
  std::vector<std::uint64_t> maximal_;
};

}  // namespace ffc
