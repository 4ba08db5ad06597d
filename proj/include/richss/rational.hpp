#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace richss {

// Exact rational scalar for weight coordinates.  Everything this library
// computes stays at desk scale (denominators 1, 2 or 4; numerators a few
// hundred at worst), so a normalized int64 fraction is plenty and keeps
// sign tests and zero tests exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
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

  constexpr bool is_zero() const { return num == 0; }
  constexpr int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }

  Rational operator-() const { return {-num, den}; }
  Rational operator+(const Rational& o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  Rational operator-(const Rational& o) const {
    return {num * o.den - o.num * den, den * o.den};
  }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
  Rational operator/(const Rational& o) const {
    if (o.num == 0)
      throw std::invalid_argument("Rational: division by zero");
    return {num * o.den, den * o.num};
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  // "3", "-1/2": integer values drop the denominator.
  std::string str() const {
    std::string s = std::to_string(num);
    if (den != 1)
      s += "/" + std::to_string(den);
    return s;
  }
};

}  // namespace richss
