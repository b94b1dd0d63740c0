#pragma once

#include <array>
#include <utility>
#include <vector>

#include "aligned/exact/interval.hpp"
#include "aligned/exact/rational.hpp"
#include "aligned/spaces/aligned_space.hpp"

namespace aligned::curvature {

using exact::Interval;
using exact::Rational;
using spaces::AlignedSpace;

/// g = (x1, x2, x3) relative to the standard metric on p1 + p2 + p3. The
/// scalar may be Rational (exact), Interval (certified enclosure) or double.
template <class T>
struct Metric {
  T x1, x2, x3;
};
using DiagonalMetric = Metric<Rational>;

template <class T>
struct Ricci {
  T r1, r2, r3;
};

template <class T>
T from_rational(const Rational& q);
template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline Interval from_rational<Interval>(const Rational& q) { return Interval(q); }
template <>
inline double from_rational<double>(const Rational& q) { return exact::to_double(q); }

/// Throws std::invalid_argument unless every entry is strictly positive.
void require_positive(const DiagonalMetric& g);

struct StructuralConstants {
  Rational t111, t222, t333, t113, t223;
};

StructuralConstants structural_constants(const AlignedSpace& s);

/// Closed-form eigenvalues on p1, p2, p3 (the primary route).
template <class T>
Ricci<T> ricci_eigenvalues(const AlignedSpace& s, const Metric<T>& g) {
  const T c1 = from_rational<T>(s.c1()), lam = from_rational<T>(s.lambda());
  const T k1 = from_rational<T>(s.kappa1()), k2 = from_rational<T>(s.kappa2());
  const T one = from_rational<T>(1);
  const T& x1 = g.x1;
  const T& x2 = g.x2;
  const T& x3 = g.x3;
  Ricci<T> r;
  r.r1 = (one + 2 * k1) / (4 * x1) - (c1 - 1) * k1 * x3 / (2 * c1 * x1 * x1);
  r.r2 = (one + 2 * k2) / (4 * x2) - k2 * x3 / (2 * c1 * x2 * x2);
  const T u = (c1 - 1) * (one - c1 * lam);  // [113]/d
  const T v = c1 - 1 - c1 * lam;            // (c1-1)[223]/d
  const T w = (c1 - 2) * (c1 - 2) * lam;    // (c1-1)[333]/d
  r.r3 = (one / 2 - u / (2 * c1) - v / (2 * c1 * (c1 - 1)) - w / (4 * (c1 - 1))) / x3 +
         u * x3 / (4 * c1 * x1 * x1) + v * x3 / (4 * c1 * (c1 - 1) * x2 * x2);
  return r;
}

/// Generic formula r_k = 1/(2x_k) + 1/(4d_k) sum [ijk] x_k/(x_i x_j)
///                      - 1/(2d_k) sum [kij] x_j/(x_k x_i)
/// over ordered pairs, fed with structural_constants(s).
template <class T>
Ricci<T> ricci_from_structure(const AlignedSpace& s, const Metric<T>& g) {
  const StructuralConstants t = structural_constants(s);
  // Symmetric tensor [ijk] on indices 0..2.
  std::array<std::array<std::array<Rational, 3>, 3>, 3> c{};
  auto set = [&](int i, int j, int k, const Rational& v) {
    const int p[6][3] = {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}};
    for (const auto& q : p) c[q[0]][q[1]][q[2]] = v;
  };
  set(0, 0, 0, t.t111);
  set(1, 1, 1, t.t222);
  set(2, 2, 2, t.t333);
  set(0, 0, 2, t.t113);
  set(1, 1, 2, t.t223);
  const T x[3] = {g.x1, g.x2, g.x3};
  const Rational dims[3] = {Rational(s.n1()), Rational(s.n2()), Rational(s.d())};
  T r[3];
  for (int k = 0; k < 3; ++k) {
    T acc = from_rational<T>(1) / (2 * x[k]);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (c[i][j][k] != 0) acc = acc + from_rational<T>(c[i][j][k] / (4 * dims[k])) * x[k] / (x[i] * x[j]);
        if (c[k][i][j] != 0) acc = acc - from_rational<T>(c[k][i][j] / (2 * dims[k])) * x[j] / (x[k] * x[i]);
      }
    }
    r[k] = acc;
  }
  return {r[0], r[1], r[2]};
}

/// Eigenvalues in the Casimir form of the general aligned-space formula with
/// a single lambda, used as an independent cross-check.
template <class T>
Ricci<T> ricci_casimir_form(const AlignedSpace& s, const Metric<T>& g) {
  const T c1 = from_rational<T>(s.c1()), lam = from_rational<T>(s.lambda());
  const T k1 = from_rational<T>(s.kappa1()), k2 = from_rational<T>(s.kappa2());
  const T one = from_rational<T>(1);
  const T& x1 = g.x1;
  const T& x2 = g.x2;
  const T& x3 = g.x3;
  Ricci<T> r;
  r.r1 = (one - (c1 - 1) * x3 / (c1 * x1)) * k1 / (2 * x1) + one / (4 * x1);
  r.r2 = (one - x3 / (c1 * x2)) * k2 / (2 * x2) + one / (4 * x2);
  const T q1 = x3 * x3 / (x1 * x1), q2 = x3 * x3 / (x2 * x2);
  r.r3 = (c1 - 1) * lam / (4 * x3) * (c1 * c1 / ((c1 - 1) * (c1 - 1)) - q1 - q2 / ((c1 - 1) * (c1 - 1))) +
         (c1 - 1) / (4 * x3) * (q1 / c1 + q2 / (c1 * (c1 - 1)));
  return r;
}

/// (r1 - r2, r2 - r3); both vanish exactly at Einstein metrics.
template <class T>
std::pair<T, T> einstein_residual(const AlignedSpace& s, const Metric<T>& g) {
  Ricci<T> r = ricci_eigenvalues(s, g);
  return {r.r1 - r.r2, r.r2 - r.r3};
}

/// n1 r1 + n2 r2 + d r3.
template <class T>
T scalar_curvature(const AlignedSpace& s, const Metric<T>& g) {
  Ricci<T> r = ricci_eigenvalues(s, g);
  return from_rational<T>(s.n1()) * r.r1 + from_rational<T>(s.n2()) * r.r2 + from_rational<T>(s.d()) * r.r3;
}

/// x3 with x1^n1 x2^n2 x3^d = 1.
double unit_volume_x3(const AlignedSpace& s, double x1, double x2);

/// scal restricted to the unit-volume slice, as a function of (x1, x2).
double unit_volume_scal(const AlignedSpace& s, double x1, double x2);

struct LandscapePoint {
  double x1, x2, x3, scal;
};

/// steps x steps samples of [x1_lo, x1_hi] x [x2_lo, x2_hi] in row-major order
/// (x1 outer). Throws std::invalid_argument for steps < 2 or a nonpositive or
/// reversed range. The result does not depend on `threads`.
std::vector<LandscapePoint> landscape_grid(const AlignedSpace& s, double x1_lo, double x1_hi, double x2_lo,
                                           double x2_hi, int steps, unsigned threads = 1);

}  // namespace aligned::curvature
