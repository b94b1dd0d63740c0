#pragma once

#include <array>
#include <optional>
#include <string>

#include "aligned/curvature/ricci.hpp"
#include "aligned/einstein/einstein.hpp"

namespace aligned::stability {

using curvature::DiagonalMetric;
using curvature::Metric;
using exact::Interval;
using exact::Rational;
using spaces::AlignedSpace;

/// The matrix L of the second variation, stored as L = D P D with
/// D = diag(sqrt(n1), sqrt(n2), sqrt(d)) so that P stays rational.
template <class T>
struct LMatrix {
  std::array<std::array<T, 3>, 3> P{};
  std::array<long, 3> dims{};

  /// L_ij^2 = P_ij^2 dims_i dims_j, exact.
  T entry_squared(int i, int j) const { return P[i][j] * P[i][j] * T(Rational(dims[i] * dims[j])); }
  /// Diagonal entries need no square root.
  T diagonal(int i) const { return P[i][i] * T(Rational(dims[i])); }
  double entry(int i, int j) const;
  /// trace(L) = sum of the two eigenvalues off the kernel direction.
  T trace() const { return diagonal(0) + diagonal(1) + diagonal(2); }
  /// Sum of principal 2x2 minors = product of those two eigenvalues.
  T minor_sum() const {
    T acc = T(Rational(0));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) acc = acc + diagonal(i) * diagonal(j) - entry_squared(i, j);
    return acc;
  }
  /// P (n1, n2, d)^T; zero iff L annihilates (sqrt n1, sqrt n2, sqrt d).
  std::array<T, 3> kernel_image() const {
    std::array<T, 3> out;
    for (int i = 0; i < 3; ++i) {
      out[i] = T(Rational(0));
      for (int j = 0; j < 3; ++j) out[i] = out[i] + P[i][j] * T(Rational(dims[j]));
    }
    return out;
  }
};

LMatrix<Rational> hessian_L(const AlignedSpace& s, const DiagonalMetric& g);
LMatrix<Interval> hessian_L(const AlignedSpace& s, const Metric<Interval>& g);

enum class Verdict { kUnstable, kSaddle, kUndetermined };
std::string to_string(Verdict v);

struct StabilityReport {
  Interval rho;                 // r2 over the certified bracket
  LMatrix<Rational> L;          // at the rational representative
  Interval witness_L22;         // 2 rho - L22
  std::optional<Interval> witness_L33;  // 2 rho - L33, abelian K only
  /// Signs of 2 rho I - L: on the unit-volume tangent, and on the whole space
  /// (the kernel direction adds 2 rho). Descending; 0 when not certified.
  std::array<int, 2> tangent_signs{};
  std::array<int, 3> eigen_signs{};
  Verdict verdict = Verdict::kUndetermined;
};

/// Throws std::invalid_argument when the metric's residual exceeds
/// einstein::residual_tolerance().
StabilityReport instability_certificate(const AlignedSpace& s, const einstein::EinsteinMetric& m);
StabilityReport instability_certificate(const AlignedSpace& s, const DiagonalMetric& g);

}  // namespace aligned::stability
