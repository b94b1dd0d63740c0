#pragma once

#include <vector>

#include "aligned/exact/unipoly.hpp"

namespace aligned::exact {

/// Polynomial in two variables, stored as a polynomial in the variable to be
/// eliminated whose coefficients are polynomials in the surviving variable:
/// terms[k] multiplies (eliminated)^k.
struct BiPoly {
  std::vector<UniPoly> terms;

  /// Degree in the eliminated variable (-1 for the zero polynomial).
  int degree() const;
  /// Substitute a value for the surviving variable.
  UniPoly specialize(const Rational& surviving) const;
};

/// Determinant of a square matrix over Q[y] by fraction-free (Bareiss)
/// elimination.
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

/// Sylvester resultant with respect to the eliminated variable. The result is
/// a polynomial in the surviving variable that vanishes wherever the two
/// inputs share a root (or both leading coefficients vanish).
/// Throws std::invalid_argument if both inputs are constant in the eliminated
/// variable.
UniPoly resultant(const BiPoly& p, const BiPoly& q);

/// Resultant of two univariate polynomials (a rational number).
Rational resultant(const UniPoly& p, const UniPoly& q);

}  // namespace aligned::exact
