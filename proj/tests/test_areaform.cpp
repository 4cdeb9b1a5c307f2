#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polysig/areaform.hpp"
#include "polysig/transforms.hpp"
#include "polysig/verify.hpp"

using namespace polysig;

namespace {

const Complex kI(0.0, 1.0);

CurvatureData rat(std::initializer_list<std::pair<std::int64_t, std::int64_t>> list) {
  std::vector<Angle> angles;
  for (const auto& [a, b] : list) angles.push_back(Angle::rational_pi(a, b));
  return CurvatureData(std::move(angles));
}

ComplexVector random_cx_vector(std::mt19937_64& rng, std::size_t len) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexVector out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.emplace_back(dist(rng), dist(rng));
  return out;
}

}  // namespace

TEST_CASE("area_pairing golden values") {
  const ComplexVector neg{0.0, 0.5 + 0.5 * kI, 1.0, 0.5 - 0.5 * kI};
  CHECK(std::abs(area_pairing(neg, neg) - Complex(-0.5, 0.0)) < 1e-15);

  const ComplexVector flat{0.0, 0.5, 1.0, 0.5};
  CHECK(std::abs(area_pairing(flat, flat)) < 1e-15);

  const ComplexVector zero{0.0, 0.0, 0.0, 0.0};
  CHECK(area_pairing(neg, zero) == Complex(0.0, 0.0));

  ComplexVector octagon;
  for (int k = 0; k < 8; ++k) octagon.push_back(std::polar(1.0, kPi * k / 4.0) - 1.0);
  CHECK(std::abs(area_pairing(octagon, octagon) -
                 Complex(2.0 * std::sqrt(2.0), 0.0)) < 1e-14);

  CHECK_THROWS_AS(area_pairing(neg, octagon), DomainError);
}

TEST_CASE("area_pairing is sesquilinear and Hermitian") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t len = 2 * std::uniform_int_distribution<int>(2, 8)(rng);
    const ComplexVector z = random_cx_vector(rng, len);
    const ComplexVector w = random_cx_vector(rng, len);
    const Complex zw = area_pairing(z, w);
    const Complex wz = area_pairing(w, z);
    CHECK(std::abs(wz - std::conj(zw)) <= 1e-12 * (1.0 + std::abs(zw)));
  }
  // Linear in the first slot, conjugate-linear in the second.
  const ComplexVector z = random_cx_vector(rng, 6);
  const ComplexVector w = random_cx_vector(rng, 6);
  const Complex lambda(0.7, -1.3);
  ComplexVector lz = z;
  for (Complex& c : lz) c *= lambda;
  CHECK(std::abs(area_pairing(lz, w) - lambda * area_pairing(z, w)) < 1e-12);
  CHECK(std::abs(area_pairing(w, lz) - std::conj(lambda) * area_pairing(w, z)) < 1e-12);
}

TEST_CASE("gram examples") {
  const CurvatureData khalf = rat({{1, 2}, {1, 2}});
  const GramMatrix g = gram(khalf, standard_basis(khalf));
  REQUIRE(g.entries.rows() == 1);
  CHECK(std::abs(g.entries(0, 0) - Complex(-0.5, 0.0)) < 1e-15);

  const CurvatureData kpi = rat({{1, 1}, {1, 1}});
  const GramMatrix gz = gram(kpi, standard_basis(kpi));
  CHECK(std::abs(gz.entries(0, 0)) < 1e-15);

  CHECK_THROWS_AS(gram(khalf, standard_basis(kpi)), DomainError);
}

TEST_CASE("gram is Hermitian for random tuples") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const CurvatureData k = random_rational_tuple(rng, n);
    const GramMatrix g = gram(k, standard_basis(k));
    const double res = (g.entries - g.entries.adjoint()).cwiseAbs().maxCoeff();
    CHECK(res <= 1e-12 * std::max(1.0, g.entries.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("inertia on small matrices") {
  GramMatrix g;
  g.entries = Eigen::MatrixXcd::Zero(1, 1);
  g.entries(0, 0) = Complex(-0.5, 0.0);
  const Inertia neg = inertia(g);
  CHECK(neg.positive == 0);
  CHECK(neg.negative == 1);
  CHECK(neg.zero == 0);

  g.entries(0, 0) = Complex(0.0, 0.0);
  const Inertia zero = inertia(g);
  CHECK(zero.zero == 1);

  g.entries = Eigen::MatrixXcd::Zero(3, 3);
  g.entries(0, 0) = 2.0;
  g.entries(1, 1) = -3.0;
  const Inertia diag = inertia(g);
  CHECK(diag.positive == 1);
  CHECK(diag.negative == 1);
  CHECK(diag.zero == 1);
  CHECK(diag.tolerance_used == doctest::Approx(3e-9));
}

TEST_CASE("inertia rejects non-Hermitian input") {
  GramMatrix g;
  g.entries = Eigen::MatrixXcd::Zero(2, 2);
  g.entries(0, 1) = Complex(1.0, 0.0);
  g.entries(1, 0) = Complex(0.5, 0.0);
  CHECK_THROWS_AS(inertia(g), NumericError);
}

TEST_CASE("inertia is invariant under congruence") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    const CurvatureData k = random_rational_tuple(rng, n);
    const GramMatrix g = gram(k, standard_basis(k));
    const Inertia base = inertia(g);

    Eigen::MatrixXcd m(n - 1, n - 1);
    do {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          std::normal_distribution<double> dist(0.0, 1.0);
          m(r, c) = Complex(dist(rng), dist(rng));
        }
      }
    } while (std::abs(m.determinant()) < 0.1);

    GramMatrix congruent = g;
    congruent.entries = m.adjoint() * g.entries * m;
    const Inertia moved = inertia(congruent);
    CHECK(moved.positive == base.positive);
    CHECK(moved.negative == base.negative);
    CHECK(moved.zero == base.zero);
  }
}

TEST_CASE("numeric_signature examples") {
  const Inertia a = numeric_signature(rat({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 1}}));
  CHECK(a.positive == 1);
  CHECK(a.negative == 3);
  CHECK(a.zero == 0);

  const Inertia b = numeric_signature(rat({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
  CHECK(b.positive == 1);
  CHECK(b.negative == 1);
  CHECK(b.zero == 1);

  const Inertia c = numeric_signature(rat({{3, 2}, {3, 2}, {3, 2}}));
  CHECK(c.positive == 2);
  CHECK(c.negative == 0);
  CHECK(c.zero == 0);
}

TEST_CASE("numeric inertia matches the closed form on random tuples") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 1000; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const CurvatureData k = random_rational_tuple(rng, n);
    const Inertia num = numeric_signature(k);
    CHECK(num.positive == p_of(k));
    CHECK(num.negative == q_of(k));
    CHECK(num.zero == epsilon(k));
  }
}

TEST_CASE("square-norm equals shoelace area on the regular polygon family") {
  for (int n = 3; n <= 8; ++n) {
    ComplexVector verts;
    for (int k = 0; k < 2 * n; ++k)
      verts.push_back(std::polar(1.0, kPi * k / n) - 1.0);

    std::vector<Angle> angles(n, Angle::rational_pi(n + 1, n));
    const CurvatureData kappa{std::move(angles)};
    REQUIRE(is_member(kappa, verts, 1e-10));

    const Complex norm = area_pairing(verts, verts);
    const PolygonRealization r = realize(PolygonVector{verts});
    CHECK(r.simple);
    CHECK(norm.real() > 0.0);
    CHECK(std::abs(norm.real() - r.orientation_area) <= 1e-10 * std::abs(norm.real()));
    CHECK(norm.real() == doctest::Approx(n * std::sin(kPi / n)).epsilon(1e-12));
  }
}
