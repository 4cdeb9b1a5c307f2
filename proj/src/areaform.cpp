#include "polysig/areaform.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace polysig {

Complex area_pairing(const ComplexVector& z, const ComplexVector& w) {
  if (z.size() != w.size()) throw DomainError("length mismatch");
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    sum += z[j] * std::conj(w[j + 1]) - z[j + 1] * std::conj(w[j]);
  }
  return Complex(0.0, 0.25) * sum;
}

GramMatrix gram(std::span<const Angle> angles, const std::vector<PolygonVector>& basis) {
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd g(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      g(j, k) = area_pairing(basis[j].coords, basis[k].coords);
    }
  }
  return GramMatrix{std::move(g), std::vector<Angle>(angles.begin(), angles.end()),
                    "standard"};
}

GramMatrix gram(const CurvatureData& kappa, const Basis& basis) {
  if (basis.kappa.tokens() != kappa.tokens())
    throw DomainError("basis does not belong to this curvature tuple");
  if (basis.vectors.size() != kappa.size() - 1)
    throw DomainError("basis has the wrong dimension");
  return gram(std::span(kappa.angles()), basis.vectors);
}

Inertia inertia(const GramMatrix& g, double tol) {
  const Eigen::Index m = g.entries.rows();
  if (g.entries.cols() != m) throw DomainError("Gram matrix must be square");

  const double max_entry = g.entries.cwiseAbs().maxCoeff();
  const double herm_residual = (g.entries - g.entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_residual > 1e-8 * std::max(1.0, max_entry))
    throw NumericError("inertia: input matrix is not Hermitian");

  const double tol_used = tol > 0.0 ? tol : 1e-9 * std::max(1.0, max_entry);

  Eigen::MatrixXd embedded(2 * m, 2 * m);
  const Eigen::MatrixXd a = g.entries.real();
  const Eigen::MatrixXd b = g.entries.imag();
  embedded.topLeftCorner(m, m) = a;
  embedded.topRightCorner(m, m) = -b;
  embedded.bottomLeftCorner(m, m) = b;
  embedded.bottomRightCorner(m, m) = a;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(embedded,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("inertia: eigenvalue computation failed");

  int pos = 0;
  int neg = 0;
  int zero = 0;
  for (Eigen::Index i = 0; i < 2 * m; ++i) {
    const double ev = solver.eigenvalues()(i);
    if (ev > tol_used) {
      ++pos;
    } else if (ev < -tol_used) {
      ++neg;
    } else {
      ++zero;
    }
  }
  if (pos % 2 != 0 || neg % 2 != 0 || zero % 2 != 0)
    throw NumericError("inertia: eigenvalue straddles the tolerance");

  return Inertia{pos / 2, neg / 2, zero / 2, tol_used};
}

Inertia numeric_signature(std::span<const Angle> angles, double tol) {
  return inertia(gram(angles, basis_vectors(angles)), tol);
}

Inertia numeric_signature(const CurvatureData& kappa, double tol) {
  return numeric_signature(std::span(kappa.angles()), tol);
}

Inertia numeric_signature(const GeneralizedCurvatureData& kappa, double tol) {
  return numeric_signature(std::span(kappa.angles()), tol);
}

double basis_condition(const std::vector<PolygonVector>& basis) {
  if (basis.empty()) throw DomainError("empty basis");
  const Eigen::Index rows = static_cast<Eigen::Index>(basis.front().coords.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = basis[c].coords[r];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

}  // namespace polysig
