#include <doctest.h>

#include <random>

#include "aligned/exact/interval.hpp"
#include "aligned/exact/quartic.hpp"
#include "aligned/exact/ratfn.hpp"
#include "aligned/exact/rational.hpp"
#include "aligned/exact/resultant.hpp"
#include "aligned/exact/roots.hpp"
#include "aligned/exact/unipoly.hpp"

using namespace aligned::exact;

namespace {

Rational q(const char* s) { return parse_rational(s); }

UniPoly quartic21() {
  return UniPoly{q("455625/30118144"), q("-1649818125/26985857024"), q("18067869653625/96717311574016"),
                 q("-15992045085375/96717311574016"), q("371645834625/48358655787008")};
}

UniPoly quartic29() {
  return UniPoly{q("1521/15625"), q("-37128/78125"), q("455406/390625"), q("-524104/390625"),
                 q("223293/390625")};
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-0.25") == make_rational(-1, 4));
  CHECK(parse_rational("1.5e-3") == make_rational(3, 2000));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_scientific(make_rational(-1, 3), 4) == "-3.333e-01");
  CHECK(to_fixed(make_rational(2, 3), 4) == "0.6667");
}

TEST_CASE("poly_eval") {
  CHECK(UniPoly{-4, 0, 1}(Rational(2)) == 0);
  CHECK(quartic29()(Rational(0)) == q("1521/15625"));
  CHECK(UniPoly{0, 1, 0, 1}(Rational(-1)) == -2);
}

TEST_CASE("gcd and square-free decomposition") {
  UniPoly p = UniPoly::from_roots({1, 1, 2, 3, 3, 3});
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == UniPoly::from_roots({2}));
  CHECK(parts[1].first == UniPoly::from_roots({1}));
  CHECK(parts[2].first == UniPoly::from_roots({3}));
  CHECK(squarefree_part(p) == UniPoly::from_roots({1, 2, 3}));
  CHECK(gcd(UniPoly::from_roots({1, 2}), UniPoly::from_roots({2, 5})) == UniPoly::from_roots({2}));
  auto [count, rest] = divide_out(p, UniPoly{-3, 1});
  CHECK(count == 3);
  CHECK(rest == UniPoly::from_roots({1, 1, 2}));
}

TEST_CASE("sturm_root_count") {
  CHECK(sturm_root_count(UniPoly::from_roots({1, 2, 3}), 0, 10) == 3);
  CHECK(sturm_root_count(UniPoly{1, 0, 1}, -10, 10) == 0);
  CHECK(sturm_root_count(quartic21(), 0, root_bound(quartic21())) == 2);
  CHECK(sturm_root_count(UniPoly::from_roots({1, 2, 3}), 1, 2) == 1);  // half-open (1, 2]
  CHECK_THROWS(sturm_root_count(UniPoly{1, 1}, 2, 2));
}

TEST_CASE("isolate_real_roots") {
  auto r = isolate_real_roots(UniPoly{-2, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0].lo >= -2);
  CHECK(r[0].hi <= -1);
  CHECK(r[1].lo >= 1);
  CHECK(r[1].hi <= 2);
  CHECK(isolate_real_roots(quartic29()).empty());
  auto d = isolate_real_roots(UniPoly::from_roots({1, 1}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].is_exact());
  CHECK(d[0].lo == 1);
  CHECK(d[0].multiplicity == 2);
}

TEST_CASE("refine_root") {
  UniPoly p{-2, 0, 1};
  auto r = isolate_real_roots(p);
  Rational eps = pow2(-40);
  RootInterval iv = refine_root(p, r[1], eps);
  CHECK(iv.width() <= eps);
  CHECK(sign(p(iv.lo)) * sign(p(iv.hi)) <= 0);
  CHECK(std::abs(to_double(iv.mid()) - 1.4142135623730951) < 1e-11);

  UniPoly c = UniPoly::from_roots({-1, 0, 1});
  RootInterval near_one{make_rational(1, 2), make_rational(3, 2), 1};
  RootInterval exact = refine_root(c, near_one, eps);
  CHECK(exact.is_exact());
  CHECK(exact.lo == 1);

  RootInterval dbl{0, 2, 2};
  CHECK_THROWS(refine_root(UniPoly::from_roots({1, 1}), dbl, eps));
}

TEST_CASE("resultant") {
  CHECK(resultant(UniPoly{-2, 1}, UniPoly{-4, 0, 1}) == 0);
  // res_x(x - a, x - b) with x eliminated, a as the surviving variable, b = 3.
  BiPoly p{{UniPoly{0, -1}, UniPoly{1}}};
  BiPoly r{{UniPoly{-3}, UniPoly{1}}};
  UniPoly res = resultant(p, r);
  CHECK(res(Rational(3)) == 0);
  CHECK(res(Rational(5)) * res(Rational(5)) == 4);
  CHECK_THROWS_AS(resultant(BiPoly{{UniPoly{1}}}, BiPoly{{UniPoly{2}}}), std::invalid_argument);
}

TEST_CASE("quartic invariants of the reference spaces") {
  auto inv21 = quartic_invariants(q("371645834625/48358655787008"), q("-15992045085375/96717311574016"),
                                  q("18067869653625/96717311574016"), q("-1649818125/26985857024"),
                                  q("455625/30118144"));
  CHECK(to_scientific(inv21.delta, 10) == "-1.495938639e-06");
  CHECK(to_scientific(inv21.R, 10) == "-1.656504408e-03");
  CHECK(to_scientific(inv21.S, 10) == "-7.053475834e-02");
  CHECK(classify_quartic(inv21).rule == QuarticRule::kNegativeDiscriminant);

  auto inv29 = quartic_invariants(q("223293/390625"), q("-524104/390625"), q("455406/390625"),
                                  q("-37128/78125"), q("1521/15625"));
  CHECK(to_scientific(inv29.delta, 10) == "1.962504947e-04");
  CHECK(to_scientific(inv29.R, 10) == "1.971272177e-01");
  CHECK(to_scientific(inv29.S, 10) == "-6.909613037e-02");
  CHECK_FALSE(classify_quartic(inv29).has_real_root);

  auto x4 = quartic_invariants(1, 0, 0, 0, 0);
  CHECK(x4.delta == 0);
  CHECK(x4.S == 0);
  CHECK(x4.T == 0);
  CHECK_THROWS_AS(quartic_invariants(0, 1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("property: sturm count matches isolation; rules match isolation; discriminant matches resultant") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int a = 0;
    while (a == 0) a = coef(rng);
    if (a < 0) a = -a;
    // Half the samples are built from roots to exercise Δ = 0 and four-real-root cases.
    UniPoly p;
    if (trial % 2 == 0) {
      p = UniPoly{coef(rng), coef(rng), coef(rng), coef(rng), a};
    } else {
      std::uniform_int_distribution<int> root(-3, 3);
      p = UniPoly::from_roots({root(rng), root(rng)}) *
          (trial % 4 == 1 ? UniPoly::from_roots({root(rng), root(rng)}) : UniPoly{coef(rng) * coef(rng) + 1, 0, 1}) *
          Rational(a);
    }
    const auto& c = p.coefficients();
    auto inv = quartic_invariants(c[4], c[3], c[2], c[1], c[0]);
    Rational res = resultant(p, p.derivative());
    CHECK(inv.delta == res / c[4]);

    auto roots = isolate_real_roots(p);
    CHECK(classify_quartic(inv).has_real_root == !roots.empty());
    if (inv.delta < 0) CHECK(roots.size() == 2);
    if (inv.delta > 0) CHECK((roots.size() == 0 || roots.size() == 4));

    Rational lo = coef(rng), hi = lo + 1 + (coef(rng) + 6);
    int from_intervals = 0;
    for (const auto& iv : roots) {
      RootInterval r = iv;
      r.multiplicity = 1;
      if (!r.is_exact()) r = refine_root(squarefree_part(p), r, pow2(-30));
      // The root lies inside [r.lo, r.hi]; refine until the bracket avoids the endpoints.
      while (!r.is_exact() && ((r.lo < lo && lo < r.hi) || (r.lo < hi && hi < r.hi))) {
        r = refine_root(squarefree_part(p), r, r.width() / 4);
      }
      if (r.lo > lo && r.hi <= hi) ++from_intervals;
      if (r.is_exact() && r.lo == hi) continue;
    }
    CHECK(sturm_root_count(p, lo, hi) == from_intervals);
  }
}

TEST_CASE("sign_at_root") {
  UniPoly p{-2, 0, 1};
  auto r = isolate_real_roots(p);
  RootInterval iv = r[1];
  CHECK(sign_at_root(p, iv, UniPoly{-1, 1}) == 1);      // sqrt2 - 1 > 0
  CHECK(sign_at_root(p, iv, UniPoly{-3, 2}) == -1);     // 2 sqrt2 - 3 < 0
  CHECK(sign_at_root(p, iv, UniPoly{-2, 0, 1}) == 0);
}

TEST_CASE("interval arithmetic") {
  Interval a(1, 2), b(-1, 3);
  Interval c = a * b;
  CHECK(c.lo() == -2);
  CHECK(c.hi() == 6);
  CHECK_THROWS_AS(a / b, std::domain_error);
  CHECK((a - a).contains_zero());
  CHECK(Interval(make_rational(1, 3)).certain_sign() == 1);
}

TEST_CASE("rational functions in m") {
  RatFn f = parse_ratfn("1-(2*m^3-3*m^2-3*m+2)/(m*(m^2-1)*(2*m-3))");
  CHECK(f(Rational(3)) == 1 - Rational(54 - 27 - 9 + 2) / Rational(3 * 8 * 3));
  RatFn g = parse_ratfn("(m^2-1)/(m-1)");
  CHECK(g == parse_ratfn("m+1"));
  CHECK(parse_ratfn("2/((m+3)*(m+2))")(Rational(5)) == make_rational(2, 56));
  CHECK_THROWS_AS(parse_ratfn("m+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfn("1/(m-m)"), std::invalid_argument);
  CHECK_THROWS_AS(g(Rational(-1)) == 0 ? throw std::domain_error("x") : parse_ratfn("1/(m-2)")(Rational(2)),
                  std::domain_error);
}
