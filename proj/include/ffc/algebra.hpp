#pragma once

// Integer and abelian-group primitives.
//
// Overflow policy: all quantities are uint64/int64. Products, lcms and group
// orders are computed with checked multiplication and throw
// std::overflow_error rather than wrap. Values up to 2^62 are supported by
// every operation here.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ffc {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// M = Z^free_rank x prod Z_{n_i}. Orders need not be prime powers.
struct GroupSpec {
  std::size_t free_rank = 0;
  std::vector<std::uint64_t> cyclic_orders;

  bool is_finite() const { return free_rank == 0; }
  /// Number of integer coordinates of an element (free first, then cyclic).
  std::size_t width() const { return free_rank + cyclic_orders.size(); }
  /// |M|; throws for infinite groups or on overflow.
  std::uint64_t order() const;
  std::string to_string() const;

  static GroupSpec trivial() { return {}; }
  static GroupSpec cyclic(std::uint64_t n) { return {0, {n}}; }
  static GroupSpec integers() { return {1, {}}; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec product(const GroupSpec& a, const GroupSpec& b);

/// "Z", "Z<k>", "<k>", joined by 'x' (e.g. "ZxZ2", "Z2xZ3", "6").
GroupSpec parse_group(std::string_view text);

/// n(M): infinite when M has a free part, otherwise lcm of the cyclic orders.
class Exponent {
 public:
  static Exponent infinite() { return Exponent(0); }
  static Exponent finite(std::uint64_t n);

  bool is_infinite() const { return value_ == 0; }
  /// Only valid when finite.
  std::uint64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  explicit Exponent(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
};

Exponent exponent(const GroupSpec& m);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
/// a^b, saturating at UINT64_MAX instead of overflowing.
std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

/// gcd of absolute values; 0 for an empty or all-zero list.
std::uint64_t gcd_all(std::span<const std::int64_t> values);

/// Ascending divisors of n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Is target a nonnegative integer combination of the generators?
/// Zero generators are ignored.
bool cone_member(std::uint64_t target, std::span<const std::uint64_t> generators);

/// The two routes behind cone_member, exposed for cross-checking.
bool cone_member_dp(std::uint64_t target, std::span<const std::uint64_t> generators);
bool cone_member_apery(std::uint64_t target, std::span<const std::uint64_t> generators);

bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than x.
std::uint64_t next_prime_above(std::uint64_t x);

}  // namespace ffc
