#include "polysig/curvature.hpp"

#include <cmath>

namespace polysig {

namespace {

bool all_rational(std::span<const Angle> angles) {
  for (const Angle& a : angles) {
    if (!a.is_rational()) return false;
  }
  return true;
}

// Floor of v with values within kRealSnapTol of an integer treated as that
// integer.
std::int64_t snapped_floor(double v) {
  const double r = std::nearbyint(v);
  if (std::abs(v - r) <= kRealSnapTol) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::floor(v));
}

}  // namespace

PartialSumLedger partial_sum_ledger(std::span<const Angle> angles) {
  PartialSumLedger ledger;
  ledger.floors.reserve(angles.size());

  if (all_rational(angles)) {
    Rational sum(0);
    for (const Angle& a : angles) {
      sum = sum + a.pi_multiple();
      const Rational half = sum / Rational(2);
      ledger.floors.push_back(half.floor());
    }
    ledger.total_is_2pi_multiple = (sum / Rational(2)).is_integer();
    return ledger;
  }

  double sum = 0.0;
  for (const Angle& a : angles) {
    sum += a.radians_value();
    ledger.floors.push_back(snapped_floor(sum / kTwoPi));
  }
  const double v = sum / kTwoPi;
  ledger.total_is_2pi_multiple = std::abs(v - std::nearbyint(v)) <= kRealSnapTol;
  return ledger;
}

int epsilon(std::span<const Angle> angles) {
  return partial_sum_ledger(angles).total_is_2pi_multiple ? 1 : 0;
}
int epsilon(const CurvatureData& kappa) { return epsilon(std::span(kappa.angles())); }
int epsilon(const GeneralizedCurvatureData& kappa) {
  return epsilon(std::span(kappa.angles()));
}

int q_of(std::span<const Angle> angles) {
  const PartialSumLedger ledger = partial_sum_ledger(angles);
  int q = 0;
  for (std::size_t i = 0; i + 1 < ledger.floors.size(); ++i) {
    if (ledger.floors[i + 1] == ledger.floors[i]) ++q;
  }
  return q;
}
int q_of(const CurvatureData& kappa) { return q_of(std::span(kappa.angles())); }
int q_of(const GeneralizedCurvatureData& kappa) { return q_of(std::span(kappa.angles())); }

int p_of(std::span<const Angle> angles) {
  const int n = static_cast<int>(angles.size());
  const int p = n - 1 - q_of(angles) - epsilon(angles);
  if (p < 0) throw NumericError("p(kappa) came out negative");
  return p;
}
int p_of(const CurvatureData& kappa) { return p_of(std::span(kappa.angles())); }
int p_of(const GeneralizedCurvatureData& kappa) { return p_of(std::span(kappa.angles())); }

Signature closed_form_signature(std::span<const Angle> angles) {
  return {p_of(angles), q_of(angles)};
}
Signature closed_form_signature(const CurvatureData& kappa) {
  return closed_form_signature(std::span(kappa.angles()));
}
Signature closed_form_signature(const GeneralizedCurvatureData& kappa) {
  return closed_form_signature(std::span(kappa.angles()));
}

CurvatureData permute(const CurvatureData& kappa, std::span<const std::size_t> sigma) {
  const std::size_t n = kappa.size();
  if (sigma.size() != n) throw DomainError("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t v : sigma) {
    if (v >= n || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
  std::vector<Angle> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(kappa[sigma[i]]);
  return CurvatureData(std::move(out));
}

}  // namespace polysig
