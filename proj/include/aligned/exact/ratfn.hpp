#pragma once

#include <string>
#include <string_view>

#include "aligned/exact/unipoly.hpp"

namespace aligned::exact {

/// Rational function num(m)/den(m) over Q, kept reduced: gcd(num, den) = 1
/// and den monic. The zero function is 0/1.
class RatFn {
 public:
  RatFn() : den_(UniPoly::constant(1)) {}
  RatFn(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}  // NOLINT
  RatFn(int c) : RatFn(Rational(c)) {}                                                  // NOLINT
  explicit RatFn(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}
  /// Throws std::domain_error when den is zero.
  RatFn(UniPoly num, UniPoly den);

  /// The parameter m itself.
  static RatFn variable();

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws std::domain_error when the denominator vanishes at m.
  Rational operator()(const Rational& m) const;

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFn pow(unsigned exponent) const;

  std::string to_string(const std::string& var = "m") const;

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

/// Parses an arithmetic expression in the single variable `m`: integers,
/// + - * / ^ (non-negative integer exponents) and parentheses, e.g.
/// "1-(2*m^3-3*m^2-3*m+2)/(m*(m^2-1)*(2*m-3))".
/// Throws std::invalid_argument with the offending position on bad input.
RatFn parse_ratfn(std::string_view text);

}  // namespace aligned::exact
