#pragma once

#include <cstdint>
#include <stdexcept>

namespace polysig {

struct RationalOverflow : std::overflow_error {
  RationalOverflow() : std::overflow_error("rational arithmetic overflow") {}
};

// Exact fraction over 64-bit integers. Always reduced, denominator > 0.
// Intermediate products run through 128-bit arithmetic and throw
// RationalOverflow instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;

  Rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  bool is_integer() const { return den_ == 1; }

  // floor(num/den), exact also for negative values.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(w(a.num_) * b.den_ + w(b.num_) * a.den_, w(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(w(a.num_) * b.den_ - w(b.num_) * a.den_, w(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(w(a.num_) * b.num_, w(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make(w(a.num_) * b.den_, w(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return w(a.num_) * b.den_ < w(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static __int128 w(std::int64_t v) { return static_cast<__int128>(v); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(__int128 num, __int128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  void assign(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    const __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (num < lo || num > hi || den > hi) throw RationalOverflow();
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace polysig
