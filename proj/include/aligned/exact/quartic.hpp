#pragma once

#include <string>

#include "aligned/exact/rational.hpp"
#include "aligned/exact/unipoly.hpp"

namespace aligned::exact {

/// Discriminant and the three auxiliary invariants of
/// a x^4 + b x^3 + c x^2 + d x + e.
struct QuarticInvariants {
  Rational delta;
  Rational R;
  Rational S;
  Rational T;
};

/// The same formulas over any commutative ring type (Rational, RatFn, ...).
template <class T>
struct QuarticInvariantsOf {
  T delta, R, S, T_;
};

template <class T>
QuarticInvariantsOf<T> quartic_invariants_of(const T& a, const T& b, const T& c, const T& d, const T& e) {
  const T a2 = a * a, a3 = a2 * a;
  const T b2 = b * b, b3 = b2 * b, b4 = b2 * b2;
  const T c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
  const T d2 = d * d, d3 = d2 * d, d4 = d2 * d2;
  const T e2 = e * e, e3 = e2 * e;
  auto k = [](int v) { return T{Rational(v)}; };
  QuarticInvariantsOf<T> inv;
  inv.delta = k(256) * a3 * e3 - k(192) * a2 * b * d * e2 - k(128) * a2 * c2 * e2 + k(144) * a2 * c * d2 * e -
              k(27) * a2 * d4 + k(144) * a * b2 * c * e2 - k(6) * a * b2 * d2 * e - k(80) * a * b * c2 * d * e +
              k(18) * a * b * c * d3 + k(16) * a * c4 * e - k(4) * a * c3 * d2 - k(27) * b4 * e2 +
              k(18) * b3 * c * d * e - k(4) * b3 * d3 - k(4) * b2 * c3 * e + b2 * c2 * d2;
  inv.R = k(64) * a3 * e - k(16) * a2 * c2 + k(16) * a * b2 * c - k(16) * a2 * b * d - k(3) * b4;
  inv.S = k(8) * a * c - k(3) * b2;
  // Standard form with 4abc; a coefficient of 1 there misclassifies
  // (x^2 + 2x + 2)^2 as having a real root.
  inv.T_ = b3 + k(8) * a2 * d - k(4) * a * b * c;
  return inv;
}

/// Throws std::invalid_argument when a == 0.
QuarticInvariants quartic_invariants(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& d, const Rational& e);

/// Which branch of the classical real-root rules applies.
enum class QuarticRule {
  kNegativeDiscriminant,        // two simple real roots, two non-real
  kPositiveAllNegative,         // Δ>0, R<0, S<0: four real roots
  kPositiveNoReal,              // Δ>0, R>=0 or S>=0: no real roots
  kZeroSomeReal,                // Δ=0, S<=0 or T!=0 or R!=0: at least one real root
  kZeroNoReal,                  // Δ=0, S>0, T=0 and R=0: no real roots
};

struct QuarticRootClass {
  QuarticRule rule;
  bool has_real_root;
};

QuarticRootClass classify_quartic(const QuarticInvariants& inv);

std::string to_string(QuarticRule rule);

}  // namespace aligned::exact
