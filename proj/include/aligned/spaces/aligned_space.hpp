#pragma once

#include <stdexcept>
#include <string>

#include "aligned/exact/rational.hpp"

namespace aligned::spaces {

using exact::Rational;

/// A violated structural inequality. what() names the failing bound.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SpaceKind { kSemisimple, kAbelian };

struct DerivedConstants {
  Rational c1;
  Rational c2;  // zero for abelian K (c2 = c1/(c1-1) is still reported by c2())
  Rational lambda;
  Rational kappa1;
  Rational kappa2;
};

/// M = G1 x G2 / K with isotropy p1 + p2 + p3 of dimensions n1, n2, d.
/// Semisimple K is described by the Killing constants a1 <= a2 (swapped on
/// construction if needed, together with n1, n2); abelian K by c1 and the
/// Casimir constants directly.
class AlignedSpace {
 public:
  static AlignedSpace semisimple(std::string name, long n1, long n2, long d, Rational a1, Rational a2);
  static AlignedSpace abelian(std::string name, long n1, long n2, long d, Rational c1, Rational kappa1,
                              Rational kappa2);

  const std::string& name() const { return name_; }
  SpaceKind kind() const { return kind_; }
  bool is_abelian() const { return kind_ == SpaceKind::kAbelian; }
  long n1() const { return n1_; }
  long n2() const { return n2_; }
  long d() const { return d_; }
  long dimension() const { return n1_ + n2_ + d_; }
  /// Zero for abelian K.
  const Rational& a1() const { return a1_; }
  const Rational& a2() const { return a2_; }
  /// True when the caller's factor order was reversed to reach a1 <= a2.
  bool swapped() const { return swapped_; }
  /// a2 < (2d+n2)/(2d+2n2), equivalently 1/c1 lies below the other root of
  /// E x^2 + F x + G. Always true for abelian K.
  bool admissible() const { return admissible_; }

  const Rational& c1() const { return k_.c1; }
  const Rational& c2() const { return k_.c2; }
  const Rational& lambda() const { return k_.lambda; }
  const Rational& kappa1() const { return k_.kappa1; }
  const Rational& kappa2() const { return k_.kappa2; }
  const DerivedConstants& constants() const { return k_; }

 private:
  AlignedSpace() = default;
  std::string name_;
  SpaceKind kind_ = SpaceKind::kSemisimple;
  long n1_ = 0, n2_ = 0, d_ = 0;
  Rational a1_, a2_;
  bool swapped_ = false;
  bool admissible_ = true;
  DerivedConstants k_;
};

DerivedConstants derive_constants(const AlignedSpace& s);

/// Upper bound on the Killing constant of an isotropy irreducible G/K with
/// dim K = d and dim G/K = n: a < (2d + n)/(2d + 2n).
Rational admissibility_bound(long d, long n);

/// Abelian K = T^d with slope (p, q): c1 = (p^2 + q^2)/p^2. Throws
/// InvariantError unless p, q >= 1 are coprime and kappa_i > 0.
AlignedSpace abelian_space(const std::string& name, long p, long q, const Rational& kappa1,
                           const Rational& kappa2, long n1, long n2, long d);

}  // namespace aligned::spaces
