#include "ffc/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <queue>

namespace ffc {

namespace {

constexpr std::uint64_t kDpTargetLimit = std::uint64_t{1} << 24;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> positive_generators(std::span<const std::uint64_t> generators) {
  std::vector<std::uint64_t> gens;
  for (auto g : generators)
    if (g > 0) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (__builtin_mul_overflow(r, a, &r)) return std::numeric_limits<std::uint64_t>::max();
    if (r == 0) return 0;
  }
  return r;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::uint64_t GroupSpec::order() const {
  if (!is_finite()) throw AlgebraError("group " + to_string() + " is infinite");
  std::uint64_t r = 1;
  for (auto n : cyclic_orders) r = checked_mul(r, n);
  return r;
}

std::string GroupSpec::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += 'x';
    out += part;
  };
  for (std::size_t i = 0; i < free_rank; ++i) append("Z");
  for (auto n : cyclic_orders) append("Z" + std::to_string(n));
  return out.empty() ? "Z1" : out;
}

GroupSpec product(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec r = a;
  r.free_rank += b.free_rank;
  r.cyclic_orders.insert(r.cyclic_orders.end(), b.cyclic_orders.begin(), b.cyclic_orders.end());
  return r;
}

GroupSpec parse_group(std::string_view text) {
  if (text.empty()) throw AlgebraError("empty group spec");
  GroupSpec spec;
  std::size_t start = 0;
  while (true) {
    auto end = text.find('x', start);
    auto factor = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (factor == "Z") {
      ++spec.free_rank;
    } else {
      auto digits = factor;
      if (!digits.empty() && digits.front() == 'Z') digits.remove_prefix(1);
      std::uint64_t order = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw AlgebraError("invalid group factor '" + std::string(factor) + "' in '" + std::string(text) + "'");
      }
      if (order == 0) throw AlgebraError("cyclic order must be >= 1 in '" + std::string(text) + "'");
      spec.cyclic_orders.push_back(order);
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return spec;
}

Exponent Exponent::finite(std::uint64_t n) {
  if (n == 0) throw AlgebraError("finite exponent must be >= 1");
  return Exponent(n);
}

std::uint64_t Exponent::value() const {
  if (is_infinite()) throw AlgebraError("exponent is infinite");
  return value_;
}

std::string Exponent::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

Exponent exponent(const GroupSpec& m) {
  if (!m.is_finite()) return Exponent::infinite();
  std::uint64_t e = 1;
  for (auto n : m.cyclic_orders) e = lcm_checked(e, n);
  return Exponent::finite(e);
}

std::uint64_t gcd_all(std::span<const std::int64_t> values) {
  std::uint64_t g = 0;
  for (auto v : values) {
    auto a = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    g = std::gcd(g, a);
  }
  return g;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw AlgebraError("divisors(0) is not a finite set");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool cone_member_dp(std::uint64_t target, std::span<const std::uint64_t> generators) {
  if (target > kDpTargetLimit) throw std::length_error("cone DP target too large");
  auto gens = positive_generators(generators);
  std::vector<char> reach(target + 1, 0);
  reach[0] = 1;
  for (std::uint64_t v = 1; v <= target; ++v) {
    for (auto g : gens) {
      if (g > v) break;
      if (reach[v - g]) {
        reach[v] = 1;
        break;
      }
    }
  }
  return reach[target];
}

bool cone_member_apery(std::uint64_t target, std::span<const std::uint64_t> generators) {
  auto gens = positive_generators(generators);
  if (target == 0) return true;
  if (gens.empty()) return false;
  const std::uint64_t m = gens.front();
  if (m > kDpTargetLimit) throw std::length_error("smallest cone generator too large for residue search");
  // dist[r] = least element of the cone congruent to r mod m.
  constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(m, kInf);
  dist[0] = 0;
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[r]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      std::uint64_t nd = 0;
      if (__builtin_add_overflow(d, gens[i], &nd)) continue;
      auto nr = (r + gens[i] % m) % m;
      if (nd < dist[nr]) {
        dist[nr] = nd;
        pq.push({nd, nr});
      }
    }
  }
  return dist[target % m] <= target;
}

bool cone_member(std::uint64_t target, std::span<const std::uint64_t> generators) {
  if (target <= kDpTargetLimit) return cone_member_dp(target, generators);
  return cone_member_apery(target, generators);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_above(std::uint64_t x) {
  for (std::uint64_t c = x + 1; c > x; ++c) {
    if (is_prime(c)) return c;
  }
  throw std::overflow_error("no prime above " + std::to_string(x) + " fits in 64 bits");
}

}  // namespace ffc
