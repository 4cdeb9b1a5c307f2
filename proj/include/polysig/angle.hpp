#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polysig/errors.hpp"
#include "polysig/rational.hpp"

namespace polysig {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Snapping tolerance applied to (sum / 2pi) before floor/integrality tests on
// raw-radian input. Rational-pi input is decided exactly and never snapped.
inline constexpr double kRealSnapTol = 1e-12;

// A strictly positive angle, stored either as an exact rational multiple of
// pi or as a raw radian value. The representation tag never changes after
// construction.
class Angle {
 public:
  enum class Kind { RationalPi, Radians };

  // (num/den) * pi, reduced to lowest terms. Must be positive.
  static Angle rational_pi(std::int64_t num, std::int64_t den);
  static Angle rational_pi(const Rational& multiple);

  // A raw radian value. Must be positive.
  static Angle radians(double value);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::RationalPi; }

  // The multiple of pi; only valid for rational angles.
  const Rational& pi_multiple() const;

  // Value in radians, available for every angle.
  double radians_value() const;

  // Canonical token in the tuple grammar ("a/b", "a", or "<float>r").
  std::string token() const;

 private:
  Angle() = default;
  Kind kind_ = Kind::RationalPi;
  Rational multiple_{1, 1};
  double radians_ = kPi;
};

// Sum of two angles of the same kind (exact for rational-pi).
Angle angle_sum(const Angle& a, const Angle& b);

// e^{i kappa}. Rational-pi angles are reduced mod 2 exactly first, and
// quarter-turn multiples yield exact unit values, so boundary cases like
// e^{i pi} = -1 hold bit-exactly.
std::complex<double> unit_phase(const Angle& a);

// Whether the angle is an integer multiple of 2pi (exact for rational-pi,
// snapped at kRealSnapTol for radians).
bool is_2pi_multiple(const Angle& a);

// Whether the angle lies strictly below 2pi (exact for rational-pi, literal
// comparison for radians).
bool below_2pi(const Angle& a);

// Ordered curvature tuple kappa = (kappa_1, ..., kappa_n), n >= 2, every
// entry strictly inside (0, 2pi), all entries sharing one representation.
class CurvatureData {
 public:
  explicit CurvatureData(std::vector<Angle> angles);

  const std::vector<Angle>& angles() const { return angles_; }
  std::size_t size() const { return angles_.size(); }
  const Angle& operator[](std::size_t i) const { return angles_[i]; }
  Angle::Kind kind() const { return angles_.front().kind(); }

  std::vector<std::string> tokens() const;

 private:
  std::vector<Angle> angles_;
};

// Internal variant used by the recursive signature method: entries in
// (0, inf), none an exact multiple of 2pi, n >= 1.
class GeneralizedCurvatureData {
 public:
  explicit GeneralizedCurvatureData(std::vector<Angle> angles);
  explicit GeneralizedCurvatureData(const CurvatureData& kappa);

  const std::vector<Angle>& angles() const { return angles_; }
  std::size_t size() const { return angles_.size(); }
  const Angle& operator[](std::size_t i) const { return angles_[i]; }

  std::vector<std::string> tokens() const;

 private:
  std::vector<Angle> angles_;
};

// Parses a comma-separated tuple of angle tokens. Grammar per token:
//   INT "/" INT   -> (a/b) * pi, positive integers
//   INT           -> a * pi
//   FLOAT "r"     -> raw radians
// Spaces around tokens are allowed. All tokens must share one representation.
CurvatureData parse_curvature(const std::string& text);

}  // namespace polysig
