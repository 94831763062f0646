#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isogr/charts.hpp"
#include "isogr/prng.hpp"

namespace isogr {

// One named invariant check; detail carries the first counterexample when
// the check fails (empty otherwise).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// Random coordinate fills honoring the chart's key sets (every admissible
// coordinate receives a small random rational).
ChartCoordsI random_chart_i(int n, int l, SmallRatRng& rng);
ChartCoordsII random_chart_ii(int n, int l, const Type2Tau& tau, SmallRatRng& rng);
ChartCoordsO random_chart_o(int n, int l, SmallRatRng& rng);

Mat random_symmetric(int n, SmallRatRng& rng);
Mat random_skew(int n, SmallRatRng& rng);
// Random (skew-)symmetric matrices of bounded rank (Gram-type products).
Mat random_symmetric_rank(int n, int r, SmallRatRng& rng);
Mat random_skew_rank(int n, int r, SmallRatRng& rng);

// The invariant suites behind `verify`.  Each runs for every supported n'
// up to max_n and returns one named check per (property, n').
SuiteResult suite_charts(Family family, int max_n, std::uint64_t seed, int trials);
SuiteResult suite_spinor(Family family, int max_n, std::uint64_t seed, int trials);
SuiteResult suite_cones(Family family, int max_n);
SuiteResult suite_fano(Family family, int max_n);
SuiteResult suite_lm(Family family, int max_n, std::uint64_t seed, int trials);

// Dispatch by suite name ("charts", "spinor", "cones", "fano", "lm", "all");
// max_n = 0 selects a per-suite default.  Unknown names raise usage_error.
std::vector<SuiteResult> run_suites(const std::string& which, Family family,
                                    int max_n, std::uint64_t seed, int trials);

}  // namespace isogr
