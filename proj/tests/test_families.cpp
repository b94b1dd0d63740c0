#include <doctest.h>

#include "aligned/einstein/einstein.hpp"
#include "aligned/families/families.hpp"

using namespace aligned::families;
using aligned::exact::make_rational;

namespace {

const aligned::spaces::Catalog& bundled() {
  static const auto cat = aligned::spaces::load_catalog(aligned::spaces::default_catalog_path());
  return cat;
}

UniPoly lin(int a, int b) { return UniPoly{Rational(b), Rational(a)}; }  // a m + b

}  // namespace

TEST_CASE("sign certificates") {
  // (m - 3)(m - 7) / (m + 1): positive beyond 7
  RatFn f(UniPoly::from_roots({3, 7}), lin(1, 1));
  SignCertificate c = sign_certificate("f", f);
  CHECK(c.tail_sign == 1);
  CHECK(c.beyond > 7);
  CHECK(c.beyond <= 8);
  CHECK_THROWS_AS(sign_certificate("z", RatFn()), std::runtime_error);
  CHECK(certified_positive_from(UniPoly::from_roots({1, 2}), 3));
  CHECK_FALSE(certified_positive_from(UniPoly::from_roots({1, 5}), 3));
}

TEST_CASE("SU(m) x SO(m+1) / SO(m) cofactors") {
  const auto* f = bundled().find_family("SUm_SOm1_SOm");
  REQUIRE(f != nullptr);
  FamilyInvariants fi = family_invariants(*f);
  CHECK(fi.delta.den() == UniPoly::monomial(1, 44));
  CHECK(fi.R.den() == UniPoly::monomial(1, 32));
  CHECK(fi.S.den() == UniPoly::monomial(1, 16));
  UniPoly q1 = extract_cofactor(fi.delta.num(), {{lin(1, 2), 4}, {lin(1, -1), 12}, {lin(3, -2), 2}, {lin(1, 1), 3},
                                                 {lin(3, -1), 12}});
  UniPoly q2 = extract_cofactor(fi.R.num(), {{lin(1, -1), 6}, {lin(3, -1), 10}});
  UniPoly q3 = extract_cofactor(fi.S.num(), {{lin(3, -1), 6}, {lin(1, -1), 4}});
  CHECK(q1.degree() == 11);
  CHECK(q2.degree() == 16);
  CHECK(q3.degree() == 6);
  CHECK(certified_positive_from(q1, 6));
  CHECK(certified_positive_from(q2, 6));
  CHECK(certified_positive_from(q3, 6));
  CHECK_THROWS_AS(extract_cofactor(fi.S.num(), {{lin(1, 5), 1}}), std::domain_error);
  FamilyVerdict v = certify_family(*f, 20);
  CHECK(v.existence.to_string() == "none");
}

TEST_CASE("specialization commutes with evaluation") {
  for (const auto& f : bundled().families) {
    if (f.table_row == 12) continue;  // large; covered by the acceptance run
    FamilyInvariants fi = family_invariants(f);
    for (long m = f.m_min; m <= f.m_min + 6; ++m) {
      auto v = aligned::einstein::classify(f.instantiate(m));
      const Rational x(m);
      CHECK_MESSAGE(v.invariants->delta == fi.delta(x), f.name, " m=", m);
      CHECK(v.invariants->R == fi.R(x));
      CHECK(v.invariants->S == fi.S(x));
      CHECK(v.invariants->T == fi.T(x));
    }
  }
}

TEST_CASE("family verdicts and per-m agreement") {
  for (int row : {1, 3, 11}) {
    const aligned::spaces::FamilySpec* f = nullptr;
    for (const auto& g : bundled().families)
      if (g.table_row == row) f = &g;
    REQUIRE(f != nullptr);
    FamilyVerdict v = certify_family(*f, 40);
    CHECK(v.existence == f->expected);
    CHECK(v.checked_up_to >= 40);
    for (const auto& [m, exists] : v.per_m) {
      if (m > 40) break;
      CHECK_MESSAGE(aligned::einstein::classify(f->instantiate(m)).exists == exists, f->name, " m=", m);
    }
  }
  CHECK_THROWS_AS(certify_family(bundled().families[0], 3), std::invalid_argument);
}
