#pragma once

#include <optional>
#include <vector>

#include "aligned/exact/unipoly.hpp"

namespace aligned::exact {

/// Rational bracket around a real root. lo == hi means the root is exactly
/// lo; otherwise the open interval (lo, hi) holds exactly `multiplicity` roots
/// of the source polynomial, counted with multiplicity, and neither endpoint
/// is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

/// Sturm chain of the squarefree part of a polynomial.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  const std::vector<UniPoly>& sequence() const { return chain_; }
  int variations(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

  /// Distinct real roots in (lo, hi]. Throws std::invalid_argument if lo >= hi.
  int count(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots in (lo, +inf).
  int count_above(const Rational& lo) const;
  int count_all() const;

 private:
  std::vector<UniPoly> chain_;
};

/// Distinct real roots of p in (lo, hi]. p must be nonzero.
int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Power of two strictly greater than the absolute value of every real root
/// (Cauchy bound rounded up).
Rational root_bound(const UniPoly& p);

/// Isolating intervals for all real roots, ascending, pairwise disjoint, with
/// multiplicities from the squarefree decomposition. p must be nonzero.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

/// Shrinks a bracket around a simple root of p to width <= eps. Bisection,
/// switching to guarded Newton steps once the bracket is narrow; every step
/// keeps a sign change, so the result is still certified.
/// Throws std::invalid_argument if iv.multiplicity > 1 or the bracket has no
/// sign change.
RootInterval refine_root(const UniPoly& p, const RootInterval& iv, const Rational& eps);

/// Sign of f at the unique root of p inside iv (iv must isolate one root of
/// p, any multiplicity). `iv` is narrowed in place as needed.
int sign_at_root(const UniPoly& p, RootInterval& iv, const UniPoly& f);

}  // namespace aligned::exact
