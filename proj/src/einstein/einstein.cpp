#include "aligned/einstein/einstein.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace aligned::einstein {

using exact::sign;
using exact::make_rational;
using spaces::InvariantError;

UniPoly QuarticData::p() const { return UniPoly{e, d, c, b, a}; }
UniPoly QuarticData::q() const { return UniPoly{G, F, E}; }
UniPoly QuarticData::x1_numerator() const { return H * UniPoly{C, A} - D * q(); }

namespace {

void expect_sign(const Rational& v, int want, const char* name) {
  if (sign(v) != want)
    throw InvariantError(std::string("coefficient ") + name + " has sign " + std::to_string(sign(v)) +
                         ", expected " + std::to_string(want));
}

Rule lift(exact::QuarticRule r) {
  switch (r) {
    case exact::QuarticRule::kNegativeDiscriminant: return Rule::kNegativeDiscriminant;
    case exact::QuarticRule::kPositiveAllNegative: return Rule::kPositiveAllNegative;
    case exact::QuarticRule::kPositiveNoReal: return Rule::kPositiveNoReal;
    case exact::QuarticRule::kZeroSomeReal: return Rule::kZeroSomeReal;
    case exact::QuarticRule::kZeroNoReal: return Rule::kZeroNoReal;
  }
  return Rule::kPositiveNoReal;
}

Rational max_residual(const AlignedSpace& s, const DiagonalMetric& g) {
  auto [u, v] = curvature::einstein_residual(s, g);
  return std::max(exact::abs(u), exact::abs(v));
}

}  // namespace

QuarticData assemble_quartic(const AlignedSpace& s) {
  if (s.is_abelian()) throw std::invalid_argument("assemble_quartic: abelian K has no quartic");
  const Rational c1 = s.c1(), lam = s.lambda(), k1 = s.kappa1(), k2 = s.kappa2();
  QuarticData q;
  q.A = -c1 * (2 * k2 + 1);
  q.B = c1 * (2 * k1 + 1);
  q.C = 2 * k2;
  q.D = -2 * (c1 - 1) * k1;
  q.E = -c1 * c1 * c1 * lam;
  q.F = c1 * (c1 - 1) * (2 * k2 + 1);
  q.G = c1 * lam - (c1 - 1) * (2 * k2 + 1);
  q.H = -(1 - c1 * lam) * (c1 - 1) * (c1 - 1);
  const Rational ahdf = q.A * q.H - q.D * q.F;
  const Rational dgch = q.D * q.G - q.C * q.H;
  q.a = q.D * q.D * q.E * q.E + q.B * q.B * q.E * q.H;
  q.b = q.B * q.B * q.F * q.H - 2 * q.D * q.E * ahdf;
  q.c = ahdf * ahdf + 2 * q.D * q.E * dgch + q.B * q.B * q.G * q.H;
  q.d = -2 * ahdf * dgch;
  q.e = dgch * dgch;
  expect_sign(q.A, -1, "A");
  expect_sign(q.B, 1, "B");
  expect_sign(q.C, 1, "C");
  expect_sign(q.D, -1, "D");
  expect_sign(q.E, -1, "E");
  expect_sign(q.F, 1, "F");
  expect_sign(q.G, -1, "G");
  expect_sign(q.H, -1, "H");
  expect_sign(q.a, 1, "a");
  expect_sign(q.b, -1, "b");
  expect_sign(q.c, 1, "c");
  expect_sign(q.d, -1, "d");
  expect_sign(q.e, 1, "e");
  return q;
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::kNegativeDiscriminant: return "delta<0";
    case Rule::kPositiveAllNegative: return "delta>0,R<0,S<0";
    case Rule::kPositiveNoReal: return "delta>0,R>=0|S>=0";
    case Rule::kZeroSomeReal: return "delta=0,S<=0|T!=0|R!=0";
    case Rule::kZeroNoReal: return "delta=0,S>0,T=0,R=0";
    case Rule::kAbelianUnique: return "abelian";
  }
  return "unknown";
}

Rational residual_tolerance() { return make_rational(1, 1000000000000LL); }

std::pair<Rational, Rational> bounds_E5(const AlignedSpace& s) {
  if (s.is_abelian()) throw InvariantError("bounds_E5: abelian K");
  const Rational c1 = s.c1(), lam = s.lambda();
  Rational lo = 1 / c1;
  Rational hi = ((c1 - 1) * (2 * s.kappa2() + 1) - c1 * lam) / (c1 * c1 * lam);
  if (lo >= hi)
    throw InvariantError(s.name() + ": empty x2 window, 1/c1 = " + exact::to_string(lo) +
                         " >= " + exact::to_string(hi));
  return {lo, hi};
}

std::pair<Rational, Rational> positivity_window(const AlignedSpace& s) {
  if (s.is_abelian()) throw InvariantError("positivity_window: abelian K");
  const Rational c1 = s.c1(), lam = s.lambda();
  Rational r1 = 1 / c1;
  Rational r2 = ((c1 - 1) * (2 * s.kappa2() + 1) - c1 * lam) / (c1 * c1 * lam);
  if (r1 == r2) throw InvariantError(s.name() + ": q has a double root, no window");
  return r1 < r2 ? std::pair{r1, r2} : std::pair{r2, r1};
}

EinsteinVerdict classify(const AlignedSpace& s) {
  EinsteinVerdict v;
  QuarticData q = assemble_quartic(s);
  QuarticInvariants inv = exact::quartic_invariants(q.a, q.b, q.c, q.d, q.e);
  exact::QuarticRootClass cls = exact::classify_quartic(inv);
  v.rule = lift(cls.rule);
  v.exists = cls.has_real_root;
  v.eliminant = q.p();
  v.sign_delta = sign(inv.delta);
  v.sign_R = sign(inv.R);
  v.sign_S = sign(inv.S);
  v.sign_T = sign(inv.T);
  switch (cls.rule) {
    case exact::QuarticRule::kNegativeDiscriminant: v.root_count = 2; break;
    case exact::QuarticRule::kPositiveAllNegative: v.root_count = 4; break;
    case exact::QuarticRule::kPositiveNoReal:
    case exact::QuarticRule::kZeroNoReal: v.root_count = 0; break;
    case exact::QuarticRule::kZeroSomeReal:
      v.root_count = static_cast<int>(exact::isolate_real_roots(v.eliminant).size());
      break;
  }
  v.quartic = q;
  v.invariants = inv;
  return v;
}

namespace {

// Narrows a simple-root bracket until both the width and the residual of the
// emitted metric are small enough. `x1_of` maps a rational x2 to x1 and an
// interval of x2 values to an enclosure of x1.
template <class X1Exact, class X1Interval>
EinsteinMetric certify(const AlignedSpace& s, const UniPoly& sqf, RootInterval iv, int multiplicity,
                       const Rational& eps, X1Exact x1_of, X1Interval x1_enclosure) {
  iv.multiplicity = 1;
  if (!iv.is_exact()) iv = exact::refine_root(sqf, iv, eps);
  const Rational tol = residual_tolerance();
  for (int round = 0;; ++round) {
    const Rational x2 = iv.is_exact() ? iv.lo : iv.mid();
    std::optional<Interval> x1i;
    try {
      x1i = x1_enclosure(Interval(iv.lo, iv.hi));
    } catch (const std::domain_error&) {
    }
    if (x1i && x1i->lo() > 0) {
      DiagonalMetric g{x1_of(x2), x2, Rational(1)};
      Rational res = max_residual(s, g);
      if (res <= tol) {
        EinsteinMetric m;
        m.x2 = iv;
        m.x2.multiplicity = multiplicity;
        m.x1 = *x1i;
        m.multiplicity = multiplicity;
        m.approx = g;
        m.residual = res;
        m.rho = curvature::ricci_eigenvalues(s, g).r2;
        return m;
      }
    }
    if (iv.is_exact() || round > 200) throw std::logic_error(s.name() + ": root refinement did not converge");
    iv = exact::refine_root(sqf, iv, iv.width() / 1024);
  }
}

}  // namespace

EinsteinVerdict solve_semisimple(const AlignedSpace& s, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  EinsteinVerdict v = classify(s);
  const QuarticData& q = *v.quartic;
  const UniPoly p = q.p(), qq = q.q(), num = q.x1_numerator();
  const UniPoly sqf = exact::squarefree_part(p);
  // x1^2 B^2 q^2 = N^2 and the E6 relation together give p; this is the
  // part that must vanish for the unsquared x1 to satisfy both equations.
  const UniPoly consistency = num * num + q.B * q.B * q.H * UniPoly::monomial(1, 2) * qq;
  // When q has a double root it is <= 0 everywhere and the first filter
  // rejects every root, so the window is never consulted.
  Rational wlo, whi;
  const bool has_window = sign(qq.coefficients()[1] * qq.coefficients()[1] - 4 * q.E * q.G) > 0;
  if (has_window) std::tie(wlo, whi) = positivity_window(s);
  int real_roots = 0;
  for (RootInterval iv : exact::isolate_real_roots(p)) {
    ++real_roots;
    const int mult = iv.multiplicity;
    RootInterval probe = iv;
    probe.multiplicity = 1;
    std::string reason;
    if (exact::sign_at_root(sqf, probe, qq) <= 0) {
      reason = "q(x2) <= 0";
    } else if (!has_window || exact::sign_at_root(sqf, probe, UniPoly{-wlo, 1}) <= 0 ||
               exact::sign_at_root(sqf, probe, UniPoly{whi, -1}) <= 0) {
      reason = "x2 outside the positivity window";
    } else if (exact::sign_at_root(sqf, probe, num) <= 0) {
      reason = "x1 <= 0";
    } else if (exact::sign_at_root(sqf, probe, consistency) != 0) {
      reason = "spurious root of the squared system";
    }
    if (!reason.empty()) {
      v.discarded.push_back({iv, reason});
      continue;
    }
    auto x1_of = [&](const Rational& x2) -> Rational { return num(x2) / (q.B * qq(x2)); };
    auto x1_enc = [&](const Interval& x2) -> Interval { return num(x2) / (Interval(q.B) * qq(x2)); };
    v.metrics.push_back(certify(s, sqf, probe, mult, eps, x1_of, x1_enc));
  }
  if (v.rule != Rule::kZeroSomeReal && real_roots != v.root_count)
    throw std::logic_error(s.name() + ": sign rule and root isolation disagree");
  v.root_count = static_cast<int>(v.metrics.size());
  v.exists = !v.metrics.empty();
  return v;
}

exact::BiPoly abelian_E1(const AlignedSpace& s) {
  // x1^2 - c1(2k1+1) x2^2 x1 + (c1-1)(2k1+1) x2^2
  const Rational c1 = s.c1(), t1 = 2 * s.kappa1() + 1;
  return exact::BiPoly{{UniPoly::monomial((c1 - 1) * t1, 2), UniPoly::monomial(-c1 * t1, 2), UniPoly::constant(1)}};
}

exact::BiPoly abelian_E2(const AlignedSpace& s) {
  // (2k2+1)(c1 x2 - 1) x1^2 - (c1-1) x2^2
  const Rational c1 = s.c1(), t2 = 2 * s.kappa2() + 1;
  return exact::BiPoly{{UniPoly::monomial(-(c1 - 1), 2), UniPoly(), UniPoly{-t2, t2 * c1}}};
}

Rational abelian_cubic_discriminant(const AlignedSpace& s) {
  const Rational c1 = s.c1(), t1 = 2 * s.kappa1() + 1, t2 = 2 * s.kappa2() + 1;
  const Rational s2 = (c1 - 1) * t2;           // S^2
  const Rational st = (c1 - 1) / t1;           // S T
  const Rational t2sq = (c1 - 1) / (t1 * t1 * t2);  // T^2
  // u^3 + b u^2 + c u + d with b = -S, c = 1, d = -T.
  return 18 * st - 4 * s2 * st + s2 - 4 - 27 * t2sq;
}

double abelian_cubic_root(const AlignedSpace& s) {
  const double c1 = exact::to_double(s.c1());
  const double t1 = 2 * exact::to_double(s.kappa1()) + 1, t2 = 2 * exact::to_double(s.kappa2()) + 1;
  const double S = std::sqrt((c1 - 1) * t2), T = std::sqrt(c1 - 1) / (t1 * std::sqrt(t2));
  auto f = [&](double u) { return ((u - S) * u + 1) * u - T; };
  // f(0) = -T < 0 and f grows without bound; bisect on a sign change.
  double lo = 0, hi = 1;
  while (f(hi) < 0) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EinsteinVerdict solve_abelian(const AlignedSpace& s, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (!s.is_abelian()) throw std::invalid_argument("solve_abelian: K is not abelian");
  EinsteinVerdict v;
  v.rule = Rule::kAbelianUnique;
  const Rational c1 = s.c1(), t1 = 2 * s.kappa1() + 1, t2 = 2 * s.kappa2() + 1;
  const UniPoly x = UniPoly::identity();
  UniPoly res = exact::resultant(abelian_E1(s), abelian_E2(s));
  // Both E1 and E2 vanish to order two at x2 = 0 in their x1^0 terms.
  while (!res.is_zero() && res.coeff(0) == 0) res = res.exact_div(x);
  v.eliminant = res;
  const UniPoly sqf = exact::squarefree_part(res);
  // From E2: x1^2 = P/R; from E1: x1 = (P + K x2^2 R)/(M x2^2 R).
  const UniPoly P = UniPoly::monomial(c1 - 1, 2), R = UniPoly{-t2, t2 * c1};
  const UniPoly K2 = UniPoly::monomial((c1 - 1) * t1, 2), M2 = UniPoly::monomial(c1 * t1, 2);
  const UniPoly lin_num = P + K2 * R, lin_den = M2 * R;
  const UniPoly consistency = lin_num * lin_num - M2 * M2 * R * P;
  for (RootInterval iv : exact::isolate_real_roots(res)) {
    const int mult = iv.multiplicity;
    RootInterval probe = iv;
    probe.multiplicity = 1;
    std::string reason;
    if (exact::sign_at_root(sqf, probe, UniPoly{-1, c1}) <= 0) {
      reason = "c1 x2 <= 1";
    } else if (exact::sign_at_root(sqf, probe, consistency) != 0) {
      reason = "no common positive x1";
    }
    if (!reason.empty()) {
      v.discarded.push_back({iv, reason});
      continue;
    }
    auto x1_of = [&](const Rational& x2) -> Rational { return lin_num(x2) / lin_den(x2); };
    auto x1_enc = [&](const Interval& x2) -> Interval { return lin_num(x2) / lin_den(x2); };
    v.metrics.push_back(certify(s, sqf, probe, mult, eps, x1_of, x1_enc));
  }
  if (v.metrics.size() != 1)
    throw std::logic_error(s.name() + ": expected a unique abelian Einstein metric, found " +
                           std::to_string(v.metrics.size()));
  // Cross-check against the cubic in u = sqrt(c1 x2 - 1).
  const double u0 = abelian_cubic_root(s);
  const double x2 = exact::to_double(v.metrics[0].approx.x2);
  if (std::abs((u0 * u0 + 1) / exact::to_double(c1) - x2) > 1e-9)
    throw std::logic_error(s.name() + ": resultant root disagrees with the cubic");
  v.root_count = 1;
  v.exists = true;
  return v;
}

EinsteinVerdict solve(const AlignedSpace& s, const Rational& eps) {
  return s.is_abelian() ? solve_abelian(s, eps) : solve_semisimple(s, eps);
}

}  // namespace aligned::einstein
