#include <doctest.h>

#include <numeric>
#include <random>

#include "ffc/algebra.hpp"

using namespace ffc;

namespace {

// Test-local oracles, independent of the library.
bool cone_brute(std::uint64_t target, const std::vector<std::uint64_t>& gens, std::size_t i = 0) {
  if (target == 0) return true;
  if (i == gens.size()) return false;
  for (std::uint64_t k = 0; k * gens[i] <= target; ++k) {
    if (cone_brute(target - k * gens[i], gens, i + 1)) return true;
  }
  return false;
}

bool prime_by_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_group") {
  auto m = parse_group("Z2xZ3");
  CHECK(m.free_rank == 0);
  CHECK(m.cyclic_orders == std::vector<std::uint64_t>{2, 3});
  auto z = parse_group("Z");
  CHECK(z.free_rank == 1);
  CHECK(z.cyclic_orders.empty());
  CHECK(parse_group("4x2") == parse_group("Z4xZ2"));
  CHECK(parse_group("ZxZ5").free_rank == 1);
  CHECK(parse_group("Z2xZ2").to_string() == "Z2xZ2");
  CHECK_THROWS_AS(parse_group("Z0"), AlgebraError);
  CHECK_THROWS_AS(parse_group("Zx"), AlgebraError);
  CHECK_THROWS_AS(parse_group(""), AlgebraError);
  CHECK_THROWS_AS(parse_group("Q"), AlgebraError);
}

TEST_CASE("exponent") {
  CHECK(exponent(parse_group("Z2xZ3")) == Exponent::finite(6));
  CHECK(exponent(parse_group("Z2xZ4")) == Exponent::finite(4));
  CHECK(exponent(parse_group("Z")).is_infinite());
  CHECK(exponent(parse_group("Z3xZ")).is_infinite());
  CHECK(exponent(GroupSpec::trivial()) == Exponent::finite(1));
  CHECK(exponent(parse_group("Z2xZ3")).value() == 6);
}

TEST_CASE("exponent of a product is the lcm") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> order(1, 30);
  for (int i = 0; i < 200; ++i) {
    GroupSpec a{0, {order(rng), order(rng)}};
    GroupSpec b{0, {order(rng)}};
    auto p = product(a, b);
    CHECK(p.cyclic_orders.size() == 3);
    CHECK(exponent(p).value() == std::lcm(exponent(a).value(), exponent(b).value()));
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(9) == std::vector<std::uint64_t>{1, 3, 9});
  CHECK_THROWS(divisors(0));
  for (std::uint64_t n = 1; n <= 300; ++n) {
    auto d = divisors(n);
    CHECK(d.front() == 1);
    CHECK(d.back() == n);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (n % k == 0) brute.push_back(k);
    }
    CHECK(d == brute);
  }
}

TEST_CASE("cone_member examples") {
  const std::vector<std::uint64_t> g72 = {7, 2}, g76 = {7, 6};
  CHECK(cone_member(9, g72));
  CHECK_FALSE(cone_member(9, g76));
  CHECK(cone_member(0, g76));
  CHECK(cone_member(0, std::span<const std::uint64_t>{}));
  CHECK_FALSE(cone_member(5, std::span<const std::uint64_t>{}));
}

TEST_CASE("cone_member agrees with brute force and its two methods agree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> gen(1, 25), size(1, 3), tgt(0, 200);
  for (int i = 0; i < 400; ++i) {
    std::vector<std::uint64_t> gens(size(rng));
    for (auto& x : gens) x = gen(rng);
    auto t = tgt(rng);
    const bool expect = cone_brute(t, gens);
    CHECK(cone_member(t, gens) == expect);
    CHECK(cone_member_dp(t, gens) == expect);
    CHECK(cone_member_apery(t, gens) == expect);
  }
}

TEST_CASE("cone_member closure properties") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> gen(2, 15), tgt(0, 80);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::uint64_t> gens = {gen(rng), gen(rng)};
    auto a = tgt(rng), b = tgt(rng);
    if (cone_member(a, gens) && cone_member(b, gens)) CHECK(cone_member(a + b, gens));
    auto with_one = gens;
    with_one.push_back(1);
    CHECK(cone_member(a, with_one));
  }
}

TEST_CASE("cone_member on large targets") {
  const std::vector<std::uint64_t> gens = {1'000'003, 999'983};
  const std::uint64_t big = 1'000'003ULL * 999'983ULL;
  CHECK(cone_member(big, gens));
  // Frobenius number ab - a - b is the largest non-member.
  CHECK_FALSE(cone_member(big - 1'000'003 - 999'983, gens));
  CHECK(cone_member(big - 1'000'003 - 999'983 + 1, gens));
}

TEST_CASE("primes") {
  CHECK(next_prime_above(12) == 13);
  CHECK(next_prime_above(13) == 17);
  CHECK(next_prime_above(1) == 2);
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == prime_by_division(n));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("gcd_all") {
  const std::vector<std::int64_t> a = {6, -9}, b = {}, c = {0, 0};
  CHECK(gcd_all(a) == 3);
  CHECK(gcd_all(b) == 0);
  CHECK(gcd_all(c) == 0);
}

TEST_CASE("overflow checks") {
  CHECK(checked_mul(1ULL << 31, 1ULL << 31) == 1ULL << 62);
  CHECK_THROWS(checked_mul(1ULL << 32, 1ULL << 32));
  CHECK(saturating_pow(3, 4) == 81);
  CHECK(saturating_pow(0, 0) == 1);
  CHECK(saturating_pow(10, 30) == UINT64_MAX);
  CHECK(lcm_checked(4, 6) == 12);
  CHECK_THROWS(parse_group("Z4294967296xZ4294967296").order());
}
