#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aligned/curvature/ricci.hpp"
#include "aligned/exact/interval.hpp"
#include "aligned/exact/quartic.hpp"
#include "aligned/exact/resultant.hpp"
#include "aligned/exact/roots.hpp"
#include "aligned/exact/unipoly.hpp"
#include "aligned/spaces/aligned_space.hpp"

namespace aligned::einstein {

using curvature::DiagonalMetric;
using exact::Interval;
using exact::QuarticInvariants;
using exact::Rational;
using exact::RootInterval;
using exact::UniPoly;
using spaces::AlignedSpace;

/// Coefficients of E3/E4 (A..H) and of the quartic p in x2 (a..e).
struct QuarticData {
  Rational A, B, C, D, E, F, G, H;
  Rational a, b, c, d, e;

  /// a x^4 + b x^3 + c x^2 + d x + e.
  UniPoly p() const;
  /// q(x) = E x^2 + F x + G.
  UniPoly q() const;
  /// H (A x + C) - D q(x); x1 = numerator / (B q) on the solution set.
  UniPoly x1_numerator() const;
};

/// Semisimple K only. Throws std::invalid_argument for abelian input and
/// spaces::InvariantError when a sign of A..H or a..e is off.
QuarticData assemble_quartic(const AlignedSpace& s);

enum class Rule {
  kNegativeDiscriminant,
  kPositiveAllNegative,
  kPositiveNoReal,
  kZeroSomeReal,
  kZeroNoReal,
  kAbelianUnique,
};

std::string to_string(Rule rule);

/// A certified Einstein metric g = (x1, x2, 1).
struct EinsteinMetric {
  RootInterval x2;  // isolates a root of the eliminant (p, or the resultant for abelian K)
  Interval x1;      // enclosure of x1 over the x2 bracket
  int multiplicity = 1;
  DiagonalMetric approx;  // rational representative (x2 midpoint, x1 from the unsquared relation)
  Rational residual;      // max(|r1 - r2|, |r2 - r3|) at approx
  Rational rho;           // Einstein constant r2 at approx
};

/// A real root of the eliminant that does not give an Einstein metric.
struct DiscardedRoot {
  RootInterval x2;
  std::string reason;
};

struct EinsteinVerdict {
  bool exists = false;
  int root_count = 0;  // real roots of p (classify) or metrics found (solve)
  Rule rule = Rule::kPositiveNoReal;
  std::optional<QuarticData> quartic;
  std::optional<QuarticInvariants> invariants;
  std::vector<EinsteinMetric> metrics;
  std::vector<DiscardedRoot> discarded;
  UniPoly eliminant;  // p, or res_{x1}(E1, E2) for abelian K
  /// Signs of delta, R, S, T (semisimple only).
  int sign_delta = 0, sign_R = 0, sign_S = 0, sign_T = 0;
};

/// Sign-rule verdict without metrics. Semisimple K only.
EinsteinVerdict classify(const AlignedSpace& s);

/// Largest residual accepted for an emitted metric.
Rational residual_tolerance();

/// All diagonal Einstein metrics with x3 = 1 and x2 brackets of width <= eps.
EinsteinVerdict solve_semisimple(const AlignedSpace& s, const Rational& eps);
EinsteinVerdict solve_abelian(const AlignedSpace& s, const Rational& eps);
/// Dispatches on the kind of K.
EinsteinVerdict solve(const AlignedSpace& s, const Rational& eps);

/// (1/c1, ((c1-1)(2k2+1) - c1 lambda)/(c1^2 lambda)). Throws
/// spaces::InvariantError when lo >= hi or for abelian K.
std::pair<Rational, Rational> bounds_E5(const AlignedSpace& s);

/// The open interval where q > 0: between 1/c1 and c1 G/E in either order.
/// Equals bounds_E5 for admissible spaces.
std::pair<Rational, Rational> positivity_window(const AlignedSpace& s);

/// Abelian K: E1 and E2 as polynomials in x1 with coefficients in x2.
exact::BiPoly abelian_E1(const AlignedSpace& s);
exact::BiPoly abelian_E2(const AlignedSpace& s);

/// Discriminant of the cubic u^3 - sqrt((c1-1)(2k2+1)) u^2 + u
/// - sqrt(c1-1)/((2k1+1) sqrt(2k2+1)); rational although the cubic is not.
Rational abelian_cubic_discriminant(const AlignedSpace& s);

/// Positive root u0 of that cubic in floating point.
double abelian_cubic_root(const AlignedSpace& s);

}  // namespace aligned::einstein
