#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "polysig/angle.hpp"

namespace polysig {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Default relative tolerance for membership and constraint residuals.
inline constexpr double kMemberTol = 1e-10;

// A point z = (z_1, ..., z_{2n}) of the constraint space: z_1 = 0 and
// e^{i kappa_i}(z_{2i-1} - z_{2i}) = z_{2i+1} - z_{2i} for 1 <= i <= n, with
// z_{2n+1} read as z_1. Doubles as a closed polygon in the plane.
struct PolygonVector {
  ComplexVector coords;
};

// n-1 linearly independent members spanning the space for kappa.
struct Basis {
  std::vector<PolygonVector> vectors;
  CurvatureData kappa;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A polygon vector read as a plane polygon: its vertices, the signed
// (shoelace) area of the closed traversal, and whether the traversal is a
// simple polygon.
struct PolygonRealization {
  std::vector<Point> vertices;
  double orientation_area = 0.0;
  bool simple = false;
};

// Solves the even coordinates from the odd ones:
//   z_{2i} = (z_{2i+1} - e^{i kappa_i} z_{2i-1}) / (1 - e^{i kappa_i}).
// odd = (z_1, z_3, ..., z_{2n-1}) with z_1 = 0.
PolygonVector solve_even_coords(std::span<const Angle> angles, const ComplexVector& odd);
PolygonVector solve_even_coords(const CurvatureData& kappa, const ComplexVector& odd);

// The n-1 solutions with a single odd coordinate set to 1 (z_{2j-1} = 1 for
// j = 2..n). Independent by construction.
std::vector<PolygonVector> basis_vectors(std::span<const Angle> angles);
Basis standard_basis(const CurvatureData& kappa);

// Whether z_1 vanishes within tol and all n constraint residuals stay below
// tol * (1 + max |z_j|).
bool is_member(std::span<const Angle> angles, const ComplexVector& z, double tol);
bool is_member(const CurvatureData& kappa, const ComplexVector& z, double tol);

// Sum of the standard basis with i.i.d. complex standard normal coefficients
// drawn from a generator seeded by `seed`. Same seed, same bits.
PolygonVector random_element(std::span<const Angle> angles, std::uint64_t seed);
PolygonVector random_element(const CurvatureData& kappa, std::uint64_t seed);

// Deterministic complex standard normal coefficients, exposed so callers can
// reproduce the combination used by random_element.
ComplexVector random_coefficients(std::size_t count, std::uint64_t seed);

// Linear combination sum_j coeffs[j] * basis[j].
PolygonVector combine(const std::vector<PolygonVector>& basis, const ComplexVector& coeffs);

PolygonRealization realize(const PolygonVector& z);

// True iff no two non-adjacent closed edges intersect and no two adjacent
// edges overlap beyond their shared endpoint. Collinearity is decided on the
// normalized cross product with tolerance 1e-12. O(m^2).
bool is_simple(std::span<const Point> vertices);

}  // namespace polysig
