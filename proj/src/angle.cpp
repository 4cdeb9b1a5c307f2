#include "polysig/angle.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace polysig {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Angle Angle::rational_pi(std::int64_t num, std::int64_t den) {
  return rational_pi(Rational(num, den));
}

Angle Angle::rational_pi(const Rational& multiple) {
  if (multiple.num() <= 0) throw DomainError("angle must be strictly positive");
  Angle a;
  a.kind_ = Kind::RationalPi;
  a.multiple_ = multiple;
  a.radians_ = multiple.value() * kPi;
  return a;
}

Angle Angle::radians(double value) {
  if (!(value > 0.0)) throw DomainError("angle must be strictly positive");
  Angle a;
  a.kind_ = Kind::Radians;
  a.radians_ = value;
  return a;
}

const Rational& Angle::pi_multiple() const {
  if (kind_ != Kind::RationalPi)
    throw DomainError("pi_multiple() called on a raw-radian angle");
  return multiple_;
}

double Angle::radians_value() const { return radians_; }

std::string Angle::token() const {
  if (kind_ == Kind::RationalPi) {
    if (multiple_.is_integer()) return std::to_string(multiple_.num());
    return std::to_string(multiple_.num()) + "/" + std::to_string(multiple_.den());
  }
  return format_double(radians_) + "r";
}

Angle angle_sum(const Angle& a, const Angle& b) {
  if (a.kind() != b.kind())
    throw MixedRepresentationError("cannot add angles of different representations");
  if (a.is_rational()) return Angle::rational_pi(a.pi_multiple() + b.pi_multiple());
  return Angle::radians(a.radians_value() + b.radians_value());
}

std::complex<double> unit_phase(const Angle& a) {
  if (!a.is_rational()) return std::polar(1.0, a.radians_value());
  const Rational& m = a.pi_multiple();
  const std::int64_t den = m.den();
  const std::int64_t num = static_cast<std::int64_t>(
      static_cast<__int128>(m.num()) % (2 * static_cast<__int128>(den)));
  const auto twice = static_cast<__int128>(num) * 2;
  if (num == 0) return {1.0, 0.0};
  if (twice == den) return {0.0, 1.0};
  if (num == den) return {-1.0, 0.0};
  if (twice == static_cast<__int128>(den) * 3) return {0.0, -1.0};
  return std::polar(1.0, static_cast<double>(num) / static_cast<double>(den) * kPi);
}

bool is_2pi_multiple(const Angle& a) {
  if (a.is_rational()) {
    const Rational half = a.pi_multiple() / Rational(2);
    return half.is_integer();
  }
  const double v = a.radians_value() / kTwoPi;
  return std::abs(v - std::nearbyint(v)) <= kRealSnapTol;
}

bool below_2pi(const Angle& a) {
  if (a.is_rational()) return a.pi_multiple() < Rational(2);
  return a.radians_value() < kTwoPi;
}

namespace {

void check_uniform_kind(const std::vector<Angle>& angles) {
  for (const Angle& a : angles) {
    if (a.kind() != angles.front().kind())
      throw MixedRepresentationError(
          "tuple mixes rational-pi and raw-radian angles");
  }
}

}  // namespace

CurvatureData::CurvatureData(std::vector<Angle> angles) : angles_(std::move(angles)) {
  if (angles_.size() < 2)
    throw DomainError("curvature tuple needs at least two angles");
  check_uniform_kind(angles_);
  for (const Angle& a : angles_) {
    if (!below_2pi(a)) throw DomainError("angle must be strictly below 2pi");
  }
}

std::vector<std::string> CurvatureData::tokens() const {
  std::vector<std::string> out;
  out.reserve(angles_.size());
  for (const Angle& a : angles_) out.push_back(a.token());
  return out;
}

GeneralizedCurvatureData::GeneralizedCurvatureData(std::vector<Angle> angles)
    : angles_(std::move(angles)) {
  if (angles_.empty()) throw DomainError("empty curvature tuple");
  check_uniform_kind(angles_);
  for (const Angle& a : angles_) {
    if (is_2pi_multiple(a))
      throw DomainError("generalized angle must not be a multiple of 2pi");
  }
}

GeneralizedCurvatureData::GeneralizedCurvatureData(const CurvatureData& kappa)
    : GeneralizedCurvatureData(kappa.angles()) {}

std::vector<std::string> GeneralizedCurvatureData::tokens() const {
  std::vector<std::string> out;
  out.reserve(angles_.size());
  for (const Angle& a : angles_) out.push_back(a.token());
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t parse_int(const std::string& s, const std::string& token) {
  if (!all_digits(s))
    throw SyntaxError("bad angle token '" + token + "'");
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno == ERANGE || end != s.c_str() + s.size())
    throw SyntaxError("bad angle token '" + token + "'");
  return v;
}

Angle parse_token(const std::string& raw) {
  const std::string tok = trim(raw);
  if (tok.empty()) throw SyntaxError("empty angle token");

  if (tok.back() == 'r') {
    const std::string body = tok.substr(0, tok.size() - 1);
    if (body.empty()) throw SyntaxError("bad angle token '" + tok + "'");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (errno == ERANGE || end != body.c_str() + body.size() || !std::isfinite(v))
      throw SyntaxError("bad angle token '" + tok + "'");
    if (!(v > 0.0)) throw DomainError("angle must be strictly positive");
    return Angle::radians(v);
  }

  const std::size_t slash = tok.find('/');
  if (slash != std::string::npos) {
    const std::int64_t num = parse_int(tok.substr(0, slash), tok);
    const std::int64_t den = parse_int(tok.substr(slash + 1), tok);
    if (den == 0) throw SyntaxError("bad angle token '" + tok + "': zero denominator");
    if (num == 0) throw DomainError("angle must be strictly positive");
    return Angle::rational_pi(num, den);
  }

  const std::int64_t num = parse_int(tok, tok);
  if (num == 0) throw DomainError("angle must be strictly positive");
  return Angle::rational_pi(num, 1);
}

}  // namespace

CurvatureData parse_curvature(const std::string& text) {
  std::vector<Angle> angles;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    angles.push_back(parse_token(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return CurvatureData(std::move(angles));
}

}  // namespace polysig
