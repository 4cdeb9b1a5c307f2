#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

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

double max_diff(const ComplexVector& a, const ComplexVector& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

PolygonVector apply(const LinearMapMatrix& map, const PolygonVector& z) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(z.coords.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = z.coords[k];
  const Eigen::VectorXcd out = map.matrix * v;
  ComplexVector coords(out.data(), out.data() + out.size());
  return PolygonVector{std::move(coords)};
}

}  // namespace

TEST_CASE("cut_glue golden example") {
  const CurvatureData kappa = rat({{1, 2}, {1, 1}});
  const PolygonVector z{{0.0, 0.5 + 0.5 * kI, 1.0, 0.5}};
  const PolygonVector image = cut_glue(kappa, 1, z);
  CHECK(max_diff(image.coords, {0.0, 0.5 * kI, kI, 0.5 + 0.5 * kI}) < 1e-15);
  CHECK(is_member(transposed(kappa, 1), image.coords, 1e-10));
  CHECK(std::abs(area_pairing(z.coords, z.coords) - Complex(-0.25, 0.0)) < 1e-15);
  CHECK(std::abs(area_pairing(image.coords, image.coords) - Complex(-0.25, 0.0)) <
        1e-15);
}

TEST_CASE("cut_glue fixes zero and degenerate members") {
  const CurvatureData kappa = rat({{1, 1}, {1, 1}});
  const PolygonVector zero{{0.0, 0.0, 0.0, 0.0}};
  CHECK(max_diff(cut_glue(kappa, 1, zero).coords, zero.coords) == 0.0);

  const PolygonVector flat{{0.0, 0.5, 1.0, 0.5}};
  const PolygonVector image = cut_glue(kappa, 1, flat);
  CHECK(is_member(kappa, image.coords, 1e-10));
  CHECK(std::abs(area_pairing(image.coords, image.coords)) < 1e-15);
}

TEST_CASE("cut_glue validates input") {
  const CurvatureData kappa = rat({{1, 2}, {1, 1}});
  const PolygonVector z{{0.0, 0.5 + 0.5 * kI, 1.0, 0.5}};
  CHECK_THROWS_AS(cut_glue(kappa, 0, z), DomainError);
  CHECK_THROWS_AS(cut_glue(kappa, 2, z), DomainError);
  const PolygonVector bad{{0.0, 1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(cut_glue(kappa, 1, bad), DomainError);
}

TEST_CASE("cut_glue isometry and membership on random samples") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const CurvatureData kappa = t % 3 == 0 ? random_real_tuple(rng, n)
                                           : random_rational_tuple(rng, n);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const PolygonVector z = random_element(kappa, rng());
    const PolygonVector image = cut_glue(kappa, i, z);
    CHECK(is_member(transposed(kappa, i), image.coords, 1e-10));
    const Complex before = area_pairing(z.coords, z.coords);
    const Complex after = area_pairing(image.coords, image.coords);
    CHECK(std::abs(after - before) <= 1e-10 * (1.0 + std::abs(before)));
  }
}

TEST_CASE("cut_glue preserves the full pairing (polarized)") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const CurvatureData kappa = random_rational_tuple(rng, n);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const PolygonVector z = random_element(kappa, rng());
    const PolygonVector w = random_element(kappa, rng());
    const Complex before = area_pairing(z.coords, w.coords);
    const Complex after =
        area_pairing(cut_glue(kappa, i, z).coords, cut_glue(kappa, i, w).coords);
    CHECK(std::abs(after - before) <= 1e-10 * (1.0 + std::abs(before)));
  }
}

TEST_CASE("cut_glue_inverse undoes cut_glue") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 500; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const CurvatureData kappa = random_rational_tuple(rng, n);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const PolygonVector z = random_element(kappa, rng());
    const PolygonVector roundtrip = cut_glue_inverse(kappa, i, cut_glue(kappa, i, z));
    CHECK(max_diff(roundtrip.coords, z.coords) <= 1e-10);
  }
}

TEST_CASE("double application of cut_glue is an isometry but not the identity") {
  // On the one-dimensional space for (pi/2, pi/2) the map multiplies by
  // e^{i pi/2}, so applying it twice negates every member.
  const CurvatureData kappa = rat({{1, 2}, {1, 2}});
  const PolygonVector z{{0.0, 0.5 + 0.5 * kI, 1.0, 0.5 - 0.5 * kI}};
  const PolygonVector once = cut_glue(kappa, 1, z);
  CHECK(max_diff(once.coords, {0.0, -0.5 + 0.5 * kI, kI, 0.5 + 0.5 * kI}) < 1e-15);
  const PolygonVector twice = cut_glue(transposed(kappa, 1), 1, once);
  ComplexVector negated = z.coords;
  for (Complex& c : negated) c = -c;
  CHECK(max_diff(twice.coords, negated) < 1e-15);
}

TEST_CASE("cut_glue_matrix") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const CurvatureData kappa = random_rational_tuple(rng, n);
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const LinearMapMatrix forward = cut_glue_matrix(kappa, i);
    const LinearMapMatrix backward = cut_glue_inverse_matrix(kappa, i);

    for (const PolygonVector& b : basis_vectors(std::span(kappa.angles()))) {
      const PolygonVector image = apply(forward, b);
      CHECK(is_member(transposed(kappa, i), image.coords, 1e-10));
      CHECK(max_diff(image.coords, cut_glue(kappa, i, b).coords) < 1e-12);
      // Invertibility: the reverse gluing restores the basis vector.
      CHECK(max_diff(apply(backward, image).coords, b.coords) <= 1e-10);
    }
  }
  CHECK_THROWS_AS(cut_glue_matrix(rat({{1, 2}, {1, 2}}), 5), DomainError);
}

TEST_CASE("reverse golden example") {
  const CurvatureData kappa = rat({{1, 2}, {1, 2}});
  const PolygonVector z{{0.0, 0.5 + 0.5 * kI, 1.0, 0.5 - 0.5 * kI}};
  const PolygonVector image = reverse(kappa, z);
  CHECK(max_diff(image.coords, {0.0, 0.5 - 0.5 * kI, 1.0, 0.5 + 0.5 * kI}) < 1e-15);
  const CurvatureData target = reversed_tuple(kappa);
  CHECK(target.tokens() == std::vector<std::string>{"3/2", "3/2"});
  CHECK(is_member(target, image.coords, 1e-10));
  CHECK(std::abs(area_pairing(image.coords, image.coords) - Complex(0.5, 0.0)) <
        1e-15);

  const PolygonVector zero{{0.0, 0.0, 0.0, 0.0}};
  CHECK(max_diff(reverse(kappa, zero).coords, zero.coords) == 0.0);

  const PolygonVector bad{{0.0, 1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(reverse(kappa, bad), DomainError);
}

TEST_CASE("reverse maps the all-pi space to itself and negates norms") {
  const CurvatureData kappa = rat({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  std::mt19937_64 rng(35);
  for (int t = 0; t < 100; ++t) {
    const PolygonVector z = random_element(kappa, rng());
    const PolygonVector image = reverse(kappa, z);
    CHECK(is_member(kappa, image.coords, 1e-10));
    CHECK(std::abs(area_pairing(image.coords, image.coords) +
                   area_pairing(z.coords, z.coords)) < 1e-12);
  }
}

TEST_CASE("reversal anti-isometry on random samples") {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 1000; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const CurvatureData kappa = t % 3 == 0 ? random_real_tuple(rng, n)
                                           : random_rational_tuple(rng, n);
    const PolygonVector z = random_element(kappa, rng());
    const PolygonVector image = reverse(kappa, z);
    CHECK(is_member(reversed_tuple(kappa), image.coords, 1e-10));
    const Complex before = area_pairing(z.coords, z.coords);
    const Complex after = area_pairing(image.coords, image.coords);
    CHECK(std::abs(after + before) <= 1e-10 * (1.0 + std::abs(before)));
  }
}

TEST_CASE("special_X golden example") {
  const CurvatureData kappa = rat({{1, 2}, {1, 2}, {1, 1}});
  const PolygonVector x = special_X(kappa);
  CHECK(max_diff(x.coords, {0.0, -1.0, -1.0 + kI, kI, 0.0, 0.0}) < 1e-15);
  CHECK(is_member(kappa, x.coords, 1e-10));

  CHECK_THROWS_AS(special_X(rat({{1, 2}, {3, 2}, {1, 1}})), DomainError);  // sum 2pi
  CHECK_THROWS_AS(special_X(rat({{1, 2}, {1, 2}})), DomainError);          // n = 2
}

TEST_CASE("special_X is orthogonal to the embedded subspace") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    CurvatureData kappa = random_rational_tuple(rng, n);
    while (is_2pi_multiple(angle_sum(kappa[0], kappa[1])))
      kappa = random_rational_tuple(rng, n);
    const PolygonVector x = special_X(kappa);
    CHECK(is_member(kappa, x.coords, 1e-10));
    for (const PolygonVector& w :
         basis_vectors(std::span(merged_tuple(kappa).angles()))) {
      const PolygonVector emb = embed_merged(kappa, w);
      CHECK(emb.coords[1] == emb.coords[3]);
      CHECK(std::abs(area_pairing(x.coords, emb.coords)) < 1e-10);
    }
  }
}

TEST_CASE("embed_merged golden example") {
  const CurvatureData kappa = rat({{1, 2}, {1, 2}, {1, 1}});
  const PolygonVector w{{0.0, 0.5, 1.0, 0.5}};
  const PolygonVector z = embed_merged(kappa, w);
  CHECK(max_diff(z.coords, {0.0, 0.5, 0.5 * (1.0 - kI), 0.5, 1.0, 0.5}) < 1e-15);
  CHECK(is_member(kappa, z.coords, 1e-10));

  const PolygonVector zero{{0.0, 0.0, 0.0, 0.0}};
  const PolygonVector zz = embed_merged(kappa, zero);
  for (const Complex& c : zz.coords) CHECK(std::abs(c) == 0.0);

  const PolygonVector not_member{{0.0, 1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(embed_merged(kappa, not_member), DomainError);
  const PolygonVector wrong_length{{0.0, 1.0}};
  CHECK_THROWS_AS(embed_merged(kappa, wrong_length), DomainError);
}

TEST_CASE("embed_merged preserves the pairing") {
  std::mt19937_64 rng(38);
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    CurvatureData kappa = random_rational_tuple(rng, n);
    while (is_2pi_multiple(angle_sum(kappa[0], kappa[1])))
      kappa = random_rational_tuple(rng, n);
    const GeneralizedCurvatureData merged = merged_tuple(kappa);
    const PolygonVector w = random_element(std::span(merged.angles()), rng());
    const PolygonVector v = random_element(std::span(merged.angles()), rng());
    const Complex before = area_pairing(w.coords, v.coords);
    const Complex after =
        area_pairing(embed_merged(kappa, w).coords, embed_merged(kappa, v).coords);
    CHECK(std::abs(after - before) <= 1e-12 * (1.0 + std::abs(before)));
  }
}

TEST_CASE("direct sum decomposition has full rank") {
  std::mt19937_64 rng(39);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    CurvatureData kappa = random_rational_tuple(rng, n);
    while (is_2pi_multiple(angle_sum(kappa[0], kappa[1])))
      kappa = random_rational_tuple(rng, n);
    std::vector<PolygonVector> family{special_X(kappa)};
    for (const PolygonVector& w :
         basis_vectors(std::span(merged_tuple(kappa).angles())))
      family.push_back(embed_merged(kappa, w));
    REQUIRE(family.size() == kappa.size() - 1);
    CHECK(basis_condition(family) < 1e8);
  }
}

TEST_CASE("recursive_signature examples") {
  CHECK(recursive_signature(rat({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 1}})) ==
        Signature{1, 3});
  CHECK(recursive_signature(rat({{1, 1}, {1, 1}, {1, 1}})) == Signature{1, 1});
  CHECK(recursive_signature(rat({{3, 2}, {3, 2}, {3, 2}})) == Signature{2, 0});
  CHECK(recursive_signature(rat({{1, 2}, {1, 2}})) == Signature{0, 1});
  CHECK(recursive_signature(rat({{1, 1}, {1, 1}})) == Signature{0, 0});
  CHECK(recursive_signature(rat({{3, 2}, {3, 2}})) == Signature{1, 0});
}

TEST_CASE("recursive_signature survives merged entries above 2pi") {
  // The merged tuple (5pi/2, 3pi/2, 3pi/2) admits no pair through its first
  // entry; the fallback must keep the floor counts of the unpermuted tuple.
  const CurvatureData pitfall = rat({{1, 1}, {3, 2}, {3, 2}, {3, 2}});
  CHECK(closed_form_signature(pitfall) == Signature{2, 1});
  CHECK(recursive_signature(pitfall) == Signature{2, 1});
  const Inertia num = numeric_signature(pitfall);
  CHECK(Signature{num.positive, num.negative} == Signature{2, 1});
}

TEST_CASE("recursive_signature agrees with the closed form") {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 2000; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const CurvatureData kappa = t % 3 == 0 ? random_real_tuple(rng, n)
                                           : random_rational_tuple(rng, n);
    CHECK(recursive_signature(kappa) == closed_form_signature(kappa));
  }
  // Small denominators force many exact 2pi-multiple pair sums.
  for (int t = 0; t < 2000; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    std::vector<Angle> angles;
    for (int k = 0; k < n; ++k) {
      const std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
      const std::int64_t a =
          std::uniform_int_distribution<std::int64_t>(1, 2 * b - 1)(rng);
      angles.push_back(Angle::rational_pi(a, b));
    }
    const CurvatureData kappa{std::move(angles)};
    CHECK(recursive_signature(kappa) == closed_form_signature(kappa));
  }
}

TEST_CASE("allpi_signature") {
  CHECK(allpi_signature(2) == Signature{0, 0});
  CHECK(allpi_signature(3) == Signature{1, 1});
  CHECK(allpi_signature(4) == Signature{1, 1});
  CHECK(allpi_signature(5) == Signature{2, 2});
  CHECK(allpi_signature(12) == Signature{5, 5});
  CHECK(allpi_signature(13) == Signature{6, 6});
  CHECK_THROWS_AS(allpi_signature(1), DomainError);

  for (int n = 2; n <= 12; ++n) {
    std::vector<Angle> angles(n, Angle::rational_pi(1, 1));
    const CurvatureData kappa{std::move(angles)};
    const Inertia num = numeric_signature(kappa);
    CHECK(Signature{num.positive, num.negative} == allpi_signature(n));
    CHECK(num.zero == epsilon(kappa));
  }
}

TEST_CASE("composed transpositions realize any permutation") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const CurvatureData kappa = random_rational_tuple(rng, n);
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);

    PolygonVector z = random_element(kappa, rng());
    const Complex norm = area_pairing(z.coords, z.coords);

    // Bubble the identity into sigma by adjacent swaps, applying the
    // matching cut-glue at every step.
    std::vector<std::size_t> order(sigma);
    CurvatureData current = kappa;
    for (std::size_t pass = 0; pass + 1 < order.size(); ++pass) {
      for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        if (order[k] > order[k + 1]) {
          std::swap(order[k], order[k + 1]);
          z = cut_glue(current, static_cast<int>(k + 1), z);
          current = transposed(current, static_cast<int>(k + 1));
        }
      }
    }

    CHECK(is_member(current, z.coords, 1e-9));
    CHECK(std::abs(area_pairing(z.coords, z.coords) - norm) <=
          1e-9 * (1.0 + std::abs(norm)));
    const Inertia a = numeric_signature(kappa);
    const Inertia b = numeric_signature(current);
    CHECK(a.positive == b.positive);
    CHECK(a.negative == b.negative);
    CHECK(a.zero == b.zero);
  }
}
