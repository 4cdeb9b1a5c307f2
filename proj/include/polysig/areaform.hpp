#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "polysig/curvature.hpp"
#include "polysig/polyspace.hpp"

namespace polysig {

// The area Hermitian pairing
//   <z, w> = (i/4) sum_{j=1}^{2n-1} (z_j conj(w_{j+1}) - z_{j+1} conj(w_j)),
// linear in z, conjugate-linear in w. The sum bound is the literal 2n-1
// (non-cyclic); for members (z_1 = 0) it coincides with the cyclic shoelace.
Complex area_pairing(const ComplexVector& z, const ComplexVector& w);

// Matrix of the pairing on a basis: entries(j, k) = <b_j, b_k>.
struct GramMatrix {
  Eigen::MatrixXcd entries;
  std::vector<Angle> kappa;
  std::string basis_id;
};

GramMatrix gram(const CurvatureData& kappa, const Basis& basis);
GramMatrix gram(std::span<const Angle> angles, const std::vector<PolygonVector>& basis);

// Eigenvalue counts of a Hermitian matrix: positive above tol, negative
// below -tol, zero within [-tol, tol].
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  double tolerance_used = 0.0;
};

// Computes the inertia via the real symmetric embedding
//   G = A + iB  ->  [[A, -B], [B, A]],
// whose spectrum is that of G with every multiplicity doubled. A count that
// comes out odd after halving is reported as an error, never rounded.
// tol <= 0 selects the default 1e-9 * max(1, max |entry|).
Inertia inertia(const GramMatrix& g, double tol = 0.0);

// inertia(gram(kappa, standard_basis(kappa)), tol).
Inertia numeric_signature(const CurvatureData& kappa, double tol = 0.0);
Inertia numeric_signature(const GeneralizedCurvatureData& kappa, double tol = 0.0);
Inertia numeric_signature(std::span<const Angle> angles, double tol = 0.0);

// Condition estimate (singular value ratio) of the 2n x (n-1) basis
// coordinate matrix; infinity when rank-deficient.
double basis_condition(const std::vector<PolygonVector>& basis);

}  // namespace polysig
