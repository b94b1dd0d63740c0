#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aligned/exact/quartic.hpp"
#include "aligned/exact/ratfn.hpp"
#include "aligned/spaces/catalog.hpp"

namespace aligned::families {

using exact::Rational;
using exact::RatFn;
using exact::UniPoly;
using spaces::ExistenceSet;
using spaces::FamilySpec;

struct FamilyInvariants {
  RatFn delta, R, S, T;
  /// Canonical order was obtained by exchanging the catalog's two factors.
  bool swapped = false;
};

/// Pushes n_i(m), d(m), a_i(m) through the coefficient pipeline. Throws
/// std::domain_error if a denominator vanishes at an integer m >= m_min, and
/// spaces::InvariantError if the order of a1(m), a2(m) is not the same for
/// all such m.
FamilyInvariants family_invariants(const FamilySpec& f);

/// Sign of num/den for every real m > beyond: tail_sign.
struct SignCertificate {
  std::string invariant;
  UniPoly numerator;
  UniPoly denominator;
  Rational beyond;  // strictly larger than every real root of either polynomial
  int tail_sign = 0;
};

/// Largest real root bound and constant sign of num/den beyond it (Sturm
/// isolation of both polynomials, then the leading coefficients).
SignCertificate sign_certificate(const std::string& name, const RatFn& f);

struct FamilyVerdict {
  std::string name;
  ExistenceSet existence;
  long m_min = 0;
  long checked_up_to = 0;  // every m in [m_min, checked_up_to] evaluated exactly
  bool swapped = false;
  std::vector<SignCertificate> certificates;
  std::vector<std::pair<long, bool>> per_m;
};

/// Throws std::invalid_argument when m_probe_max < m_min + 10 and
/// std::runtime_error when an invariant is identically zero or the existence
/// set is not one of all / none / m <= k / m >= k.
FamilyVerdict certify_family(const FamilySpec& f, long m_probe_max);

/// num / prod factor^power; throws std::domain_error if a division is inexact.
UniPoly extract_cofactor(const UniPoly& num, const std::vector<std::pair<UniPoly, int>>& factors);

/// No real root in [from, inf) and positive at `from` (Sturm count).
bool certified_positive_from(const UniPoly& p, const Rational& from);

}  // namespace aligned::families
