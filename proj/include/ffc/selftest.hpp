#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffc {

struct SelftestOptions {
  bool deep = false;  // tenfold budgets and instance counts
  std::uint64_t seed = 20130601;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Throws GraphError if a builtin graph cannot be built.
void check_builtins();

/// Desk-scale invariant suites: flow generation vs filtering, fast path vs
/// flow oracle, exponent-law counts, subcubic equivalence, Tutte invariance,
/// kernels vs serial reference.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace ffc
