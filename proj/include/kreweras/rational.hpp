#ifndef KREWERAS_RATIONAL_HPP
#define KREWERAS_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace kreweras {

/// Exact rational over int64, normalized with positive denominator.  All
/// quantities in bump-diagram geometry are tiny (indices up to 3n <= a few
/// dozen), so overflow is not a concern.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num * b.den, a.den * b.num};
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace kreweras

#endif
