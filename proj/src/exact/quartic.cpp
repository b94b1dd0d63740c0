#include "aligned/exact/quartic.hpp"

#include <stdexcept>

namespace aligned::exact {

QuarticInvariants quartic_invariants(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& d, const Rational& e) {
  if (a == 0) throw std::invalid_argument("quartic_invariants: leading coefficient is zero");
  QuarticInvariantsOf<Rational> g = quartic_invariants_of(a, b, c, d, e);
  return {g.delta, g.R, g.S, g.T_};
}

QuarticRootClass classify_quartic(const QuarticInvariants& inv) {
  const int sd = sign(inv.delta);
  if (sd < 0) return {QuarticRule::kNegativeDiscriminant, true};
  if (sd > 0) {
    if (inv.R < 0 && inv.S < 0) return {QuarticRule::kPositiveAllNegative, true};
    return {QuarticRule::kPositiveNoReal, false};
  }
  // Two complex double roots need R = 0 as well; with R != 0 a real double
  // root survives even when S > 0 and T = 0.
  if (inv.S <= 0 || inv.T != 0 || inv.R != 0) return {QuarticRule::kZeroSomeReal, true};
  return {QuarticRule::kZeroNoReal, false};
}

std::string to_string(QuarticRule rule) {
  switch (rule) {
    case QuarticRule::kNegativeDiscriminant: return "delta<0";
    case QuarticRule::kPositiveAllNegative: return "delta>0,R<0,S<0";
    case QuarticRule::kPositiveNoReal: return "delta>0,R>=0|S>=0";
    case QuarticRule::kZeroSomeReal: return "delta=0,S<=0|T!=0|R!=0";
    case QuarticRule::kZeroNoReal: return "delta=0,S>0,T=0,R=0";
  }
  return "unknown";
}

}  // namespace aligned::exact
