#include "aligned/spaces/aligned_space.hpp"

#include <numeric>

namespace aligned::spaces {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

void require_dims(long n1, long n2, long d) {
  require(n1 >= 1, "n1 >= 1 violated (n1 = " + std::to_string(n1) + ")");
  require(n2 >= 1, "n2 >= 1 violated (n2 = " + std::to_string(n2) + ")");
  require(d >= 1, "d >= 1 violated (d = " + std::to_string(d) + ")");
}

}  // namespace

Rational admissibility_bound(long d, long n) { return exact::make_rational(2 * d + n, 2 * d + 2 * n); }

AlignedSpace AlignedSpace::semisimple(std::string name, long n1, long n2, long d, Rational a1, Rational a2) {
  require_dims(n1, n2, d);
  AlignedSpace s;
  s.name_ = std::move(name);
  if (a1 > a2) {
    std::swap(a1, a2);
    std::swap(n1, n2);
    s.swapped_ = true;
  }
  require(a1 > 0, "0 < a1 violated (a1 = " + exact::to_string(a1) + ")");
  require(a2 < 1, "a2 < 1 violated (a2 = " + exact::to_string(a2) + ")");
  s.n1_ = n1;
  s.n2_ = n2;
  s.d_ = d;
  s.a1_ = a1;
  s.a2_ = a2;
  s.k_.c1 = (a1 + a2) / a2;
  s.k_.c2 = (a1 + a2) / a1;
  s.k_.lambda = a1 * a2 / (a1 + a2);
  s.k_.kappa1 = Rational(d) * (1 - a1) / n1;
  s.k_.kappa2 = Rational(d) * (1 - a2) / n2;
  s.admissible_ = a2 < admissibility_bound(d, n2);
  return s;
}

AlignedSpace AlignedSpace::abelian(std::string name, long n1, long n2, long d, Rational c1, Rational kappa1,
                                   Rational kappa2) {
  require_dims(n1, n2, d);
  require(c1 > 1, "c1 > 1 violated (c1 = " + exact::to_string(c1) + ")");
  require(kappa1 > 0, "kappa1 > 0 violated (kappa1 = " + exact::to_string(kappa1) + ")");
  require(kappa2 > 0, "kappa2 > 0 violated (kappa2 = " + exact::to_string(kappa2) + ")");
  AlignedSpace s;
  s.name_ = std::move(name);
  s.kind_ = SpaceKind::kAbelian;
  s.n1_ = n1;
  s.n2_ = n2;
  s.d_ = d;
  s.k_.c1 = c1;
  s.k_.c2 = c1 / (c1 - 1);
  s.k_.lambda = 0;
  s.k_.kappa1 = kappa1;
  s.k_.kappa2 = kappa2;
  return s;
}

DerivedConstants derive_constants(const AlignedSpace& s) { return s.constants(); }

AlignedSpace abelian_space(const std::string& name, long p, long q, const Rational& kappa1,
                           const Rational& kappa2, long n1, long n2, long d) {
  require(p >= 1 && q >= 1, "slope needs p, q >= 1");
  require(std::gcd(p, q) == 1, "slope (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) +
                                   ") is not coprime");
  Rational c1 = exact::make_rational(p * p + q * q, p * p);
  return AlignedSpace::abelian(name, n1, n2, d, c1, kappa1, kappa2);
}

}  // namespace aligned::spaces
