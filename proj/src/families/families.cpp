#include "aligned/families/families.hpp"

#include <stdexcept>

#include "aligned/exact/roots.hpp"

namespace aligned::families {

using exact::sign;

namespace {

// First integer strictly above every real root of p (or m_min when none).
Rational root_ceiling(const UniPoly& p) {
  Rational top = 0;
  bool any = false;
  if (p.degree() <= 0) return top;
  for (const auto& iv : exact::isolate_real_roots(p)) {
    if (!any || iv.hi > top) top = iv.hi;
    any = true;
  }
  if (!any) return Rational(exact::root_bound(p) * -1);
  exact::Integer f;
  mpz_fdiv_q(f.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
  return Rational(f + 1);
}

void check_poles(const RatFn& f, long m_min, const char* what) {
  if (f.den().degree() <= 0) return;
  for (const auto& iv : exact::isolate_real_roots(f.den())) {
    if (iv.hi < m_min) continue;
    exact::Integer lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    for (long m = std::max(m_min, lo.get_si()); m <= hi.get_si(); ++m)
      if (f.den()(Rational(m)) == 0)
        throw std::domain_error(std::string(what) + " has a pole at m = " + std::to_string(m));
  }
}

}  // namespace

SignCertificate sign_certificate(const std::string& name, const RatFn& f) {
  if (f.is_zero()) throw std::runtime_error(name + " is identically zero");
  SignCertificate c;
  c.invariant = name;
  c.numerator = f.num();
  c.denominator = f.den();
  c.beyond = std::max(root_ceiling(f.num()), root_ceiling(f.den()));
  c.tail_sign = sign(f.num().leading()) * sign(f.den().leading());
  return c;
}

FamilyInvariants family_invariants(const FamilySpec& f) {
  RatFn n1 = f.n1_of_m, n2 = f.n2_of_m, d = f.d_of_m, a1 = f.a1_of_m, a2 = f.a2_of_m;
  for (const RatFn* g : {&n1, &n2, &d, &a1, &a2}) check_poles(*g, f.m_min, "family data");

  // Canonical order a1 <= a2 must hold uniformly in m.
  FamilyInvariants out;
  const RatFn gap = a2 - a1;
  if (!gap.is_zero()) {
    SignCertificate c = sign_certificate("a2-a1", gap);
    bool pos = false, neg = false;
    for (long m = f.m_min; Rational(m) <= c.beyond; ++m) {
      const int sg = sign(gap(Rational(m)));
      pos = pos || sg > 0;
      neg = neg || sg < 0;
    }
    pos = pos || c.tail_sign > 0;
    neg = neg || c.tail_sign < 0;
    if (pos && neg) throw spaces::InvariantError(f.name + ": order of a1(m), a2(m) changes with m");
    if (neg) {
      std::swap(n1, n2);
      std::swap(a1, a2);
      out.swapped = true;
    }
  }

  const RatFn one(1), two(2);
  const RatFn c1 = (a1 + a2) / a2;
  const RatFn lam = a1 * a2 / (a1 + a2);
  const RatFn k1 = d * (one - a1) / n1, k2 = d * (one - a2) / n2;
  const RatFn A = -c1 * (two * k2 + one);
  const RatFn B = c1 * (two * k1 + one);
  const RatFn C = two * k2;
  const RatFn D = -two * (c1 - one) * k1;
  const RatFn E = -c1 * c1 * c1 * lam;
  const RatFn F = c1 * (c1 - one) * (two * k2 + one);
  const RatFn G = c1 * lam - (c1 - one) * (two * k2 + one);
  const RatFn H = -(one - c1 * lam) * (c1 - one) * (c1 - one);
  const RatFn ahdf = A * H - D * F, dgch = D * G - C * H;
  const RatFn a = D * D * E * E + B * B * E * H;
  const RatFn b = B * B * F * H - two * D * E * ahdf;
  const RatFn c = ahdf * ahdf + two * D * E * dgch + B * B * G * H;
  const RatFn dd = -two * ahdf * dgch;
  const RatFn e = dgch * dgch;
  // Over a common denominator L the invariants are homogeneous polynomials
  // in the numerators: delta/L^6, R/L^4, S/L^2, T/L^3. This avoids a gcd
  // per operation on large intermediate polynomials.
  UniPoly L = a.den();
  for (const RatFn* x : {&b, &c, &dd, &e}) L = L * x->den().exact_div(exact::gcd(L, x->den()));
  auto lift = [&](const RatFn& x) { return x.num() * L.exact_div(x.den()); };
  auto inv = exact::quartic_invariants_of(lift(a), lift(b), lift(c), lift(dd), lift(e));
  out.delta = RatFn(inv.delta, L.pow(6));
  out.R = RatFn(inv.R, L.pow(4));
  out.S = RatFn(inv.S, L.pow(2));
  out.T = RatFn(inv.T_, L.pow(3));
  return out;
}

FamilyVerdict certify_family(const FamilySpec& f, long m_probe_max) {
  if (m_probe_max < f.m_min + 10) throw std::invalid_argument("m_probe_max must be at least m_min + 10");
  FamilyInvariants fi = family_invariants(f);
  FamilyVerdict v;
  v.name = f.name;
  v.m_min = f.m_min;
  v.swapped = fi.swapped;
  const std::pair<const char*, const RatFn*> named[] = {{"delta", &fi.delta}, {"R", &fi.R}, {"S", &fi.S}, {"T", &fi.T}};
  Rational beyond = f.m_min;
  for (const auto& [name, fn] : named) {
    check_poles(*fn, f.m_min, name);
    v.certificates.push_back(sign_certificate(name, *fn));
    beyond = std::max(beyond, v.certificates.back().beyond);
  }
  // Past `beyond` every sign is frozen, so the verdict there equals the one
  // at the first integer above it.
  exact::Integer top;
  mpz_cdiv_q(top.get_mpz_t(), beyond.get_num_mpz_t(), beyond.get_den_mpz_t());
  v.checked_up_to = std::max(m_probe_max, top.get_si() + 1);
  for (long m = f.m_min; m <= v.checked_up_to; ++m) {
    const Rational x(m);
    exact::QuarticInvariants inv{fi.delta(x), fi.R(x), fi.S(x), fi.T(x)};
    v.per_m.emplace_back(m, exact::classify_quartic(inv).has_real_root);
  }

  const bool first = v.per_m.front().second, last = v.per_m.back().second;
  std::size_t changes = 0, at = 0;
  for (std::size_t i = 1; i < v.per_m.size(); ++i)
    if (v.per_m[i].second != v.per_m[i - 1].second) {
      ++changes;
      at = i;
    }
  using Kind = ExistenceSet::Kind;
  if (changes == 0) v.existence = {first ? Kind::kAll : Kind::kNone, 0};
  else if (changes == 1 && first && !last) v.existence = {Kind::kUpTo, v.per_m[at - 1].first};
  else if (changes == 1 && !first && last) v.existence = {Kind::kFrom, v.per_m[at].first};
  else throw std::runtime_error(f.name + ": existence set is not an interval of m");
  return v;
}

UniPoly extract_cofactor(const UniPoly& num, const std::vector<std::pair<UniPoly, int>>& factors) {
  UniPoly out = num;
  for (const auto& [p, k] : factors)
    for (int i = 0; i < k; ++i) out = out.exact_div(p);
  return out;
}

bool certified_positive_from(const UniPoly& p, const Rational& from) {
  if (p.is_zero() || p(from) <= 0) return false;
  if (p.degree() <= 0) return true;
  return exact::SturmChain(p).count_above(from) == 0;
}

}  // namespace aligned::families
