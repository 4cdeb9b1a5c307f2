#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polysig/angle.hpp"

namespace polysig {

// Signature (P, N) of a Hermitian form: counts of positive and negative
// squares in a diagonalization.
struct Signature {
  int positive = 0;
  int negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend Signature operator+(const Signature& a, const Signature& b) {
    return {a.positive + b.positive, a.negative + b.negative};
  }
};

// Floors of the running sums Sum_{k<=i} kappa_k / 2pi, plus whether the total
// is an exact multiple of 2pi. Computed with exact integer arithmetic for
// rational-pi tuples; raw-radian tuples are snapped at kRealSnapTol.
struct PartialSumLedger {
  std::vector<std::int64_t> floors;
  bool total_is_2pi_multiple = false;
};

PartialSumLedger partial_sum_ledger(std::span<const Angle> angles);

// 1 iff the total of the tuple is an integer multiple of 2pi.
int epsilon(std::span<const Angle> angles);
int epsilon(const CurvatureData& kappa);
int epsilon(const GeneralizedCurvatureData& kappa);

// Number of indices 1 <= i < n whose adjacent partial-sum floors agree.
int q_of(std::span<const Angle> angles);
int q_of(const CurvatureData& kappa);
int q_of(const GeneralizedCurvatureData& kappa);

// n - 1 - q - epsilon; never negative on admissible input.
int p_of(std::span<const Angle> angles);
int p_of(const CurvatureData& kappa);
int p_of(const GeneralizedCurvatureData& kappa);

// The closed-form signature (p, q).
Signature closed_form_signature(std::span<const Angle> angles);
Signature closed_form_signature(const CurvatureData& kappa);
Signature closed_form_signature(const GeneralizedCurvatureData& kappa);

// kappa(sigma) = (kappa_{sigma(0)}, ..., kappa_{sigma(n-1)}), zero-based.
// sigma must be a bijection on {0..n-1}.
CurvatureData permute(const CurvatureData& kappa, std::span<const std::size_t> sigma);

}  // namespace polysig
