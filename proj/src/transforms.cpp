#include "polysig/transforms.hpp"

#include <cmath>
#include <utility>

namespace polysig {

namespace {

void check_index(const CurvatureData& kappa, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= kappa.size())
    throw DomainError("transposition index out of range");
}

void check_member(std::span<const Angle> angles, const ComplexVector& z) {
  if (!is_member(angles, z, kMemberTol))
    throw DomainError("input vector is not a member of the space");
}

bool sum_is_2pi_multiple(const Angle& a, const Angle& b) {
  return is_2pi_multiple(angle_sum(a, b));
}

}  // namespace

CurvatureData transposed(const CurvatureData& kappa, int i) {
  check_index(kappa, i);
  std::vector<Angle> angles = kappa.angles();
  std::swap(angles[i - 1], angles[i]);
  return CurvatureData(std::move(angles));
}

PolygonVector cut_glue(const CurvatureData& kappa, int i, const PolygonVector& z) {
  check_index(kappa, i);
  check_member(std::span(kappa.angles()), z.coords);

  const std::size_t n = kappa.size();
  const std::size_t m = 2 * n;
  const Complex a = std::conj(unit_phase(kappa[i - 1]));  // e^{-i kappa_i}
  const ComplexVector& c = z.coords;

  // 0-based slots: z_{2i} = c[2i-1], z_{2i+2} = c[2i+1], z_{2i+3} = c[(2i+2) % 2n].
  const std::size_t s = 2 * static_cast<std::size_t>(i) - 1;
  ComplexVector out = c;
  out[s] = c[s] + a * (c[s + 2] - c[s]);
  out[s + 1] = c[s] + a * (c[(s + 3) % m] - c[s]);
  out[s + 2] = c[s];
  return PolygonVector{std::move(out)};
}

PolygonVector cut_glue_inverse(const CurvatureData& kappa, int i, const PolygonVector& w) {
  check_index(kappa, i);
  const CurvatureData target = transposed(kappa, i);
  check_member(std::span(target.angles()), w.coords);

  const std::size_t n = kappa.size();
  const std::size_t m = 2 * n;
  const Complex g = unit_phase(kappa[i - 1]);  // e^{+i kappa_i}
  const ComplexVector& c = w.coords;

  const std::size_t s = 2 * static_cast<std::size_t>(i) - 1;
  ComplexVector out = c;
  out[s] = c[s + 2];
  out[s + 1] = c[s + 2] + g * (c[s - 1] - c[s + 2]);
  out[s + 2] = c[s + 2] + g * (c[s] - c[s + 2]);
  out[(s + 3) % m] = c[s + 2] + g * (c[s + 1] - c[s + 2]);
  out[0] = Complex(0.0, 0.0);
  return PolygonVector{std::move(out)};
}

LinearMapMatrix cut_glue_matrix(const CurvatureData& kappa, int i) {
  check_index(kappa, i);
  const std::size_t n = kappa.size();
  const Eigen::Index m = static_cast<Eigen::Index>(2 * n);
  const Complex a = std::conj(unit_phase(kappa[i - 1]));
  const Eigen::Index s = 2 * i - 1;

  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Identity(m, m);
  mat.row(s).setZero();
  mat(s, s) = Complex(1.0, 0.0) - a;
  mat(s, s + 2) = a;
  mat.row(s + 1).setZero();
  mat(s + 1, s) = Complex(1.0, 0.0) - a;
  mat(s + 1, (s + 3) % m) = a;
  mat.row(s + 2).setZero();
  mat(s + 2, s) = Complex(1.0, 0.0);

  return LinearMapMatrix{std::move(mat), kappa.angles(), transposed(kappa, i).angles()};
}

LinearMapMatrix cut_glue_inverse_matrix(const CurvatureData& kappa, int i) {
  check_index(kappa, i);
  const std::size_t n = kappa.size();
  const Eigen::Index m = static_cast<Eigen::Index>(2 * n);
  const Complex g = unit_phase(kappa[i - 1]);
  const Eigen::Index s = 2 * i - 1;

  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Identity(m, m);
  mat.row(s).setZero();
  mat(s, s + 2) = Complex(1.0, 0.0);
  mat.row(s + 1).setZero();
  mat(s + 1, s - 1) = g;
  mat(s + 1, s + 2) = Complex(1.0, 0.0) - g;
  mat.row(s + 2).setZero();
  mat(s + 2, s) = g;
  mat(s + 2, s + 2) = Complex(1.0, 0.0) - g;
  const Eigen::Index wrap = (s + 3) % m;
  if (wrap != 0) {
    mat.row(wrap).setZero();
    mat(wrap, s + 1) = g;
    mat(wrap, s + 2) = Complex(1.0, 0.0) - g;
  }

  return LinearMapMatrix{std::move(mat), transposed(kappa, i).angles(), kappa.angles()};
}

CurvatureData reversed_tuple(const CurvatureData& kappa) {
  std::vector<Angle> out;
  out.reserve(kappa.size());
  for (std::size_t k = kappa.size(); k > 0; --k) {
    const Angle& a = kappa[k - 1];
    if (a.is_rational()) {
      out.push_back(Angle::rational_pi(Rational(2) - a.pi_multiple()));
    } else {
      out.push_back(Angle::radians(kTwoPi - a.radians_value()));
    }
  }
  return CurvatureData(std::move(out));
}

PolygonVector reverse(const CurvatureData& kappa, const PolygonVector& z) {
  check_member(std::span(kappa.angles()), z.coords);
  const std::size_t m = z.coords.size();
  ComplexVector out(m);
  out[0] = Complex(0.0, 0.0);
  for (std::size_t j = 1; j < m; ++j) out[j] = z.coords[m - j];
  return PolygonVector{std::move(out)};
}

PolygonVector special_X(std::span<const Angle> angles) {
  const std::size_t n = angles.size();
  if (n <= 2) throw DomainError("special_X needs n > 2");
  if (sum_is_2pi_multiple(angles[0], angles[1]))
    throw DomainError("special_X requires kappa_1 + kappa_2 not a multiple of 2pi");

  const Complex e1 = unit_phase(angles[0]);
  const Complex e2 = unit_phase(angles[1]);
  if (std::abs(e2 - Complex(1.0, 0.0)) <= 1e-14)
    throw DomainError("special_X: degenerate kappa_2");

  const Complex x = (e1 * e2 - e2) / (e2 - Complex(1.0, 0.0));
  ComplexVector out(2 * n, Complex(0.0, 0.0));
  out[1] = Complex(-1.0, 0.0);
  out[2] = Complex(-1.0, 0.0) + e1;
  out[3] = x;
  return PolygonVector{std::move(out)};
}

PolygonVector special_X(const CurvatureData& kappa) {
  return special_X(std::span(kappa.angles()));
}

PolygonVector special_X(const GeneralizedCurvatureData& kappa) {
  return special_X(std::span(kappa.angles()));
}

GeneralizedCurvatureData merged_tuple(std::span<const Angle> angles) {
  if (angles.size() < 2) throw DomainError("merged_tuple needs at least two angles");
  std::vector<Angle> out;
  out.reserve(angles.size() - 1);
  out.push_back(angle_sum(angles[0], angles[1]));
  for (std::size_t k = 2; k < angles.size(); ++k) out.push_back(angles[k]);
  return GeneralizedCurvatureData(std::move(out));
}

GeneralizedCurvatureData merged_tuple(const CurvatureData& kappa) {
  return merged_tuple(std::span(kappa.angles()));
}

PolygonVector embed_merged(std::span<const Angle> angles, const PolygonVector& w) {
  const std::size_t n = angles.size();
  if (n <= 2) throw DomainError("embed_merged needs n > 2");
  const GeneralizedCurvatureData merged = merged_tuple(angles);
  if (w.coords.size() != 2 * (n - 1))
    throw DomainError("embedded vector has the wrong length");
  check_member(std::span(merged.angles()), w.coords);

  const Complex e1 = unit_phase(angles[0]);
  ComplexVector out(2 * n);
  out[0] = Complex(0.0, 0.0);
  out[1] = w.coords[1];
  out[2] = w.coords[1] * (Complex(1.0, 0.0) - e1);
  out[3] = w.coords[1];
  for (std::size_t k = 4; k < 2 * n; ++k) out[k] = w.coords[k - 2];
  return PolygonVector{std::move(out)};
}

PolygonVector embed_merged(const CurvatureData& kappa, const PolygonVector& w) {
  return embed_merged(std::span(kappa.angles()), w);
}

namespace {

Signature pair_signature(const Angle& a, const Angle& b) {
  const std::vector<Angle> pair{a, b};
  return closed_form_signature(std::span(pair));
}

// The three-case form for a pair of angles inside (0, 2pi): compare the sum
// with 2pi.
Signature pair_signature_by_total(const Angle& a, const Angle& b) {
  if (a.is_rational() && b.is_rational()) {
    const Rational sum = a.pi_multiple() + b.pi_multiple();
    if (sum > Rational(2)) return {1, 0};
    if (sum == Rational(2)) return {0, 0};
    return {0, 1};
  }
  const double sum = a.radians_value() + b.radians_value();
  if (std::abs(sum / kTwoPi - 1.0) <= kRealSnapTol) return {0, 0};
  return sum > kTwoPi ? Signature{1, 0} : Signature{0, 1};
}

std::vector<Angle> move_pair_to_front(const std::vector<Angle>& t, std::size_t i,
                                      std::size_t j) {
  std::vector<Angle> out;
  out.reserve(t.size());
  out.push_back(t[i]);
  out.push_back(t[j]);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k != i && k != j) out.push_back(t[k]);
  }
  return out;
}

std::vector<Angle> merge_front(const std::vector<Angle>& t) {
  std::vector<Angle> out;
  out.reserve(t.size() - 1);
  out.push_back(angle_sum(t[0], t[1]));
  for (std::size_t k = 2; k < t.size(); ++k) out.push_back(t[k]);
  return out;
}

// Structural recursion on a generalized tuple. Merged entries can exceed
// 2pi; such an entry only ever sits in front, and the pair scan keeps it
// there: the floor-count q is invariant under permutations of sub-2pi
// entries but not under moving a larger entry across them, so a tuple led
// by a large entry only admits front pairs. When no admissible pair
// remains, the closed form on the tuple itself is the documented fallback.
Signature signature_by_recursion(const std::vector<Angle>& t) {
  const std::size_t m = t.size();
  if (m == 1) return {0, 0};
  if (m == 2 && below_2pi(t[0]) && below_2pi(t[1]))
    return pair_signature_by_total(t[0], t[1]);

  if (!below_2pi(t[0])) {
    for (std::size_t j = 1; j < m; ++j) {
      if (!sum_is_2pi_multiple(t[0], t[j])) {
        const std::vector<Angle> perm = move_pair_to_front(t, 0, j);
        return pair_signature(t[0], t[j]) + signature_by_recursion(merge_front(perm));
      }
    }
    return closed_form_signature(std::span(t));
  }

  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!sum_is_2pi_multiple(t[i], t[j])) {
        const std::vector<Angle> perm = move_pair_to_front(t, i, j);
        return pair_signature(t[i], t[j]) + signature_by_recursion(merge_front(perm));
      }
    }
  }
  return closed_form_signature(std::span(t));
}

}  // namespace

Signature recursive_signature(const CurvatureData& kappa) {
  return signature_by_recursion(kappa.angles());
}

Signature allpi_signature(int n) {
  if (n < 2) throw DomainError("allpi_signature needs n >= 2");
  if (n % 2 == 1) {
    const int k = n / 2;
    return {k, k};
  }
  const int k = n / 2;
  return {k - 1, k - 1};
}

}  // namespace polysig
