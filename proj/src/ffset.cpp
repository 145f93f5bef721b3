#include "ffc/ffset.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffc/algebra.hpp"

namespace ffc {

FFSet FFSet::all() {
  FFSet s;
  s.all_ = true;
  return s;
}

FFSet FFSet::down_closure(std::span<const std::uint64_t> generators) {
  FFSet s;
  for (auto t : generators) {
    if (t == 0) throw std::invalid_argument("down_closure: 0 is not a positive integer");
    s.insert_maximal(t);
  }
  return s;
}

FFSet FFSet::from_gcd(std::uint64_t g) {
  FFSet s;
  s.insert_gcd(g);
  return s;
}

bool FFSet::contains(std::uint64_t n) const {
  if (n == 0) return false;
  if (all_) return true;
  return std::any_of(maximal_.begin(), maximal_.end(), [n](std::uint64_t m) { return m % n == 0; });
}

std::vector<std::uint64_t> FFSet::members() const {
  if (all_) throw std::logic_error("FFSet::members on all of N");
  std::vector<std::uint64_t> out;
  for (auto m : maximal_) {
    auto d = divisors(m);
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void FFSet::insert_maximal(std::uint64_t x) {
  if (all_ || contains(x)) return;
  std::erase_if(maximal_, [x](std::uint64_t m) { return x % m == 0; });
  maximal_.insert(std::upper_bound(maximal_.begin(), maximal_.end(), x), x);
}

void FFSet::insert_gcd(std::uint64_t g) {
  if (g == 0) {
    all_ = true;
    maximal_.clear();
    return;
  }
  insert_maximal(g);
}

void FFSet::unite(const FFSet& other) {
  if (other.all_) {
    *this = all();
    return;
  }
  for (auto m : other.maximal_) insert_maximal(m);
}

std::string FFSet::to_string() const {
  if (all_) return "all";
  std::string out = "{";
  bool first = true;
  for (auto m : members()) {
    if (!first) out += ',';
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

}  // namespace ffc
