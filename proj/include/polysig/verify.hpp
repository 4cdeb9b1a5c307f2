#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polysig/curvature.hpp"

namespace polysig {

struct VerifyOptions {
  int n_max = 8;
  int trials = 200;
  std::uint64_t seed = 0;
  // Test hook: negates q inside the sweep's closed-form path so the harness
  // itself can be checked to catch disagreements.
  bool fault_negate_q = false;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Runs the property sweep: signature agreement across the three methods on
// random rational and raw-radian tuples, cut-glue isometry, reversal
// anti-isometry, the orthogonal decomposition, the eight targeted sum-range
// cases, and the all-pi family.
VerifyReport run_verify(const VerifyOptions& options);

std::string verify_table(const VerifyReport& report);

// Random tuple with every angle (a/b) pi, 1 <= a < 2b <= max_two_den.
CurvatureData random_rational_tuple(std::mt19937_64& rng, int n, int max_two_den = 48);

// Random tuple with raw-radian angles uniform in (0, 2pi).
CurvatureData random_real_tuple(std::mt19937_64& rng, int n);

// Targeted generators for the eight total-angle cases (part is 1..8).
// Parts 1..7 stay inside (0, 2pi)^n; part 8 has a final entry in (2pi, 4pi).
CurvatureData sum_range_case_tuple(std::mt19937_64& rng, int part, int n);
GeneralizedCurvatureData sum_range_case8_tuple(std::mt19937_64& rng, int n);

// The signature each case must produce.
Signature sum_range_case_expected(int part, int n);

}  // namespace polysig
