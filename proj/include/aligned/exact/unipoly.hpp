#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aligned/exact/interval.hpp"
#include "aligned/exact/rational.hpp"

namespace aligned::exact {

/// Dense univariate polynomial over the rationals. coefficients()[k] is the
/// coefficient of x^k; trailing zeros are always trimmed, so the zero
/// polynomial has an empty coefficient list.
class UniPoly {
 public:
  /// degree() of the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// The polynomial x.
  static UniPoly identity();
  /// (x - r1)(x - r2)...
  static UniPoly from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  /// Horner enclosure over an interval.
  Interval operator()(const Interval& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(x + shift)
  UniPoly shifted(const Rational& shift) const;
  /// p(-x)
  UniPoly reflected() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend UniPoly operator*(const UniPoly& p, const Rational& c) { return c * p; }
  friend UniPoly operator/(const UniPoly& p, const Rational& c);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly pow(unsigned exponent) const;

  /// Polynomial division over Q: returns (quotient, remainder).
  /// Throws std::domain_error when dividing by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Quotient of an exact division; throws std::domain_error if the
  /// remainder is nonzero.
  UniPoly exact_div(const UniPoly& divisor) const;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// Yun's algorithm: returns monic squarefree, pairwise coprime factors f_i with
/// p = lc(p) * prod f_i^i, as (factor, multiplicity) pairs with nonconstant
/// factors only.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Number of times `factor` divides `p` (factor of positive degree), and the
/// cofactor left after removing those copies.
std::pair<int, UniPoly> divide_out(const UniPoly& p, const UniPoly& factor);

/// Scale by a positive rational so that all coefficients are integers with
/// gcd 1. Sign of the leading coefficient is preserved.
UniPoly primitive_part(const UniPoly& p);

}  // namespace aligned::exact
