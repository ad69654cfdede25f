#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace paneitz {

/// Exact rational arithmetic on 64-bit numerator/denominator, used as a
/// shadow value next to floating-point results wherever a quantity has an
/// exact closed form. Overflow is detected (via 128-bit intermediates) and
/// throws rather than wrapping.
class Rational {
public:
  Rational() = default;
  Rational(long long num) : num_(num), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                             i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  static Rational from128(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    constexpr i128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim)
      throw std::overflow_error("Rational: 64-bit overflow after reduction");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    Rational r = from128(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  long long num_ = 0;
  long long den_ = 1;
};

} // namespace paneitz
