#include "polysig/polyspace.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polysig {

namespace {

constexpr double kDegeneratePivot = 1e-14;
constexpr double kCollinearTol = 1e-12;

double max_abs(const ComplexVector& z) {
  double m = 0.0;
  for (const Complex& c : z) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

PolygonVector solve_even_coords(std::span<const Angle> angles, const ComplexVector& odd) {
  const std::size_t n = angles.size();
  if (odd.size() != n) throw DomainError("odd coordinate count must equal n");
  if (odd[0] != Complex(0.0, 0.0))
    throw DomainError("first odd coordinate must be zero");

  ComplexVector z(2 * n, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) z[2 * j] = odd[j];

  for (std::size_t i = 0; i < n; ++i) {
    const Complex e = unit_phase(angles[i]);
    const Complex pivot = Complex(1.0, 0.0) - e;
    if (std::abs(pivot) <= kDegeneratePivot)
      throw DomainError("degenerate angle: e^{i kappa} = 1");
    const Complex z_prev = z[2 * i];                  // z_{2i-1}
    const Complex z_next = z[(2 * i + 2) % (2 * n)];  // z_{2i+1}
    z[2 * i + 1] = (z_next - e * z_prev) / pivot;
  }
  return PolygonVector{std::move(z)};
}

PolygonVector solve_even_coords(const CurvatureData& kappa, const ComplexVector& odd) {
  return solve_even_coords(std::span(kappa.angles()), odd);
}

std::vector<PolygonVector> basis_vectors(std::span<const Angle> angles) {
  const std::size_t n = angles.size();
  std::vector<PolygonVector> out;
  out.reserve(n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    ComplexVector odd(n, Complex(0.0, 0.0));
    odd[j] = Complex(1.0, 0.0);
    out.push_back(solve_even_coords(angles, odd));
  }
  return out;
}

Basis standard_basis(const CurvatureData& kappa) {
  return Basis{basis_vectors(std::span(kappa.angles())), kappa};
}

bool is_member(std::span<const Angle> angles, const ComplexVector& z, double tol) {
  const std::size_t n = angles.size();
  if (z.size() != 2 * n) throw DomainError("coordinate count must equal 2n");
  if (std::abs(z[0]) > tol) return false;

  const double scale = tol * (1.0 + max_abs(z));
  for (std::size_t i = 0; i < n; ++i) {
    const Complex e = unit_phase(angles[i]);
    const Complex r =
        e * (z[2 * i] - z[2 * i + 1]) - (z[(2 * i + 2) % (2 * n)] - z[2 * i + 1]);
    if (std::abs(r) > scale) return false;
  }
  return true;
}

bool is_member(const CurvatureData& kappa, const ComplexVector& z, double tol) {
  return is_member(std::span(kappa.angles()), z, tol);
}

ComplexVector random_coefficients(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform01 = [&rng]() {
    // 53-bit mantissa in [0, 1); shifted to (0, 1] for the log.
    return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  ComplexVector out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    // Box-Muller; the pair (x, y) scaled by 1/sqrt(2) gives a complex
    // standard normal with unit total variance.
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double x = r * std::cos(kTwoPi * u2);
    const double y = r * std::sin(kTwoPi * u2);
    out.emplace_back(x * 0.7071067811865476, y * 0.7071067811865476);
  }
  return out;
}

PolygonVector combine(const std::vector<PolygonVector>& basis, const ComplexVector& coeffs) {
  if (basis.empty()) throw DomainError("empty basis");
  if (coeffs.size() != basis.size())
    throw DomainError("coefficient count must equal the basis dimension");
  ComplexVector z(basis.front().coords.size(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t k = 0; k < z.size(); ++k) z[k] += coeffs[j] * basis[j].coords[k];
  }
  return PolygonVector{std::move(z)};
}

PolygonVector random_element(std::span<const Angle> angles, std::uint64_t seed) {
  const std::vector<PolygonVector> basis = basis_vectors(angles);
  return combine(basis, random_coefficients(basis.size(), seed));
}

PolygonVector random_element(const CurvatureData& kappa, std::uint64_t seed) {
  return random_element(std::span(kappa.angles()), seed);
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(const Point& a, const Point& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

// -1 / 0 / +1 with collinearity decided on the normalized cross product.
int orientation(const Point& o, const Point& a, const Point& b) {
  const double c = cross(o, a, b);
  const double scale = dist(o, a) * dist(o, b);
  if (std::abs(c) <= kCollinearTol * scale) return 0;
  return c > 0.0 ? 1 : -1;
}

// Assumes p collinear with [a, b]; checks containment in the closed segment.
bool on_segment(const Point& a, const Point& b, const Point& p) {
  const double slack = kCollinearTol * (1.0 + dist(a, b));
  return p.x >= std::min(a.x, b.x) - slack && p.x <= std::max(a.x, b.x) + slack &&
         p.y >= std::min(a.y, b.y) - slack && p.y <= std::max(a.y, b.y) + slack;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int d1 = orientation(c, d, a);
  const int d2 = orientation(c, d, b);
  const int d3 = orientation(a, b, c);
  const int d4 = orientation(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

}  // namespace

bool is_simple(std::span<const Point> vertices) {
  const std::size_t m = vertices.size();
  if (m < 3) throw DomainError("a polygon needs at least three vertices");

  for (std::size_t i = 0; i < m; ++i) {
    if (dist(vertices[i], vertices[(i + 1) % m]) == 0.0) return false;
  }

  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % m];
    for (std::size_t j = i + 1; j < m; ++j) {
      const Point& c = vertices[j];
      const Point& d = vertices[(j + 1) % m];
      const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      if (adjacent) {
        // Shared endpoint v; the edges must not fold back over each other.
        const Point& v = (j == i + 1) ? b : a;
        const Point& p = (j == i + 1) ? a : b;
        const Point& q = (j == i + 1) ? d : c;
        if (orientation(v, p, q) == 0 &&
            (p.x - v.x) * (q.x - v.x) + (p.y - v.y) * (q.y - v.y) > 0.0)
          return false;
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

PolygonRealization realize(const PolygonVector& z) {
  PolygonRealization r;
  r.vertices.reserve(z.coords.size());
  for (const Complex& c : z.coords) r.vertices.push_back({c.real(), c.imag()});

  double twice_area = 0.0;
  const std::size_t m = r.vertices.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Point& a = r.vertices[k];
    const Point& b = r.vertices[(k + 1) % m];
    twice_area += a.x * b.y - b.x * a.y;
  }
  r.orientation_area = 0.5 * twice_area;
  r.simple = is_simple(r.vertices);
  return r;
}

}  // namespace polysig
