#include "aligned/stability/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace aligned::stability {

namespace {

template <class T>
LMatrix<T> build(const AlignedSpace& s, const Metric<T>& g) {
  using curvature::from_rational;
  const T c1 = from_rational<T>(s.c1()), k1 = from_rational<T>(s.kappa1()), k2 = from_rational<T>(s.kappa2());
  const T n1 = from_rational<T>(s.n1()), n2 = from_rational<T>(s.n2()), d = from_rational<T>(s.d());
  const T one = from_rational<T>(1);
  const T x1sq = g.x1 * g.x1, x2sq = g.x2 * g.x2;
  LMatrix<T> L;
  L.dims = {s.n1(), s.n2(), s.d()};
  const T a = (c1 - one) * k1 / (c1 * x1sq);  // L11
  const T b = k2 / (c1 * x2sq);               // L22
  L.P[0][0] = a / n1;
  L.P[1][1] = b / n2;
  L.P[0][2] = L.P[2][0] = -a / d;
  L.P[1][2] = L.P[2][1] = -b / d;
  L.P[0][1] = L.P[1][0] = from_rational<T>(0);
  L.P[2][2] = (k2 * n2 * x1sq + (c1 - one) * k1 * n1 * x2sq) / (d * x1sq * x2sq * c1) / d;
  return L;
}

int certain(const Interval& v) { return v.certain_sign().value_or(0); }

}  // namespace

template <>
double LMatrix<Rational>::entry(int i, int j) const {
  return exact::to_double(P[i][j]) * std::sqrt(double(dims[i]) * double(dims[j]));
}

template <>
double LMatrix<Interval>::entry(int i, int j) const {
  return exact::to_double(P[i][j].mid()) * std::sqrt(double(dims[i]) * double(dims[j]));
}

LMatrix<Rational> hessian_L(const AlignedSpace& s, const DiagonalMetric& g) {
  curvature::require_positive(g);
  return build(s, g);
}

LMatrix<Interval> hessian_L(const AlignedSpace& s, const Metric<Interval>& g) { return build(s, g); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kUnstable: return "unstable";
    case Verdict::kSaddle: return "saddle";
    case Verdict::kUndetermined: return "undetermined";
  }
  return "unknown";
}

namespace {

StabilityReport certify(const AlignedSpace& s, const Metric<Interval>& gi, const DiagonalMetric& approx) {
  StabilityReport rep;
  rep.rho = curvature::ricci_eigenvalues(s, gi).r2;
  rep.L = hessian_L(s, approx);
  LMatrix<Interval> L = hessian_L(s, gi);
  const Interval two_rho = Interval(2) * rep.rho;
  rep.witness_L22 = two_rho - L.diagonal(1);
  if (s.is_abelian()) rep.witness_L33 = two_rho - L.diagonal(2);

  // Eigenvalues mu1, mu2 of L off the kernel: mu1 + mu2 = tau, mu1 mu2 = delta.
  const Interval tau = L.trace(), delta = L.minor_sum();
  const Interval sum = Interval(2) * two_rho - tau;
  const Interval prod = two_rho * two_rho - two_rho * tau + delta;
  const int sp = certain(prod), ss = certain(sum);
  if (sp < 0) rep.tangent_signs = {1, -1};
  else if (sp > 0 && ss != 0) rep.tangent_signs = {ss, ss};
  else rep.tangent_signs = {0, 0};
  rep.eigen_signs = {certain(two_rho), rep.tangent_signs[0], rep.tangent_signs[1]};
  std::sort(rep.eigen_signs.begin(), rep.eigen_signs.end(), std::greater<>());

  if (certain(rep.witness_L22) > 0) rep.verdict = Verdict::kUnstable;
  if (rep.witness_L33 && certain(*rep.witness_L33) < 0 && rep.verdict == Verdict::kUnstable)
    rep.verdict = Verdict::kSaddle;
  return rep;
}

}  // namespace

StabilityReport instability_certificate(const AlignedSpace& s, const einstein::EinsteinMetric& m) {
  if (m.residual > einstein::residual_tolerance())
    throw std::invalid_argument(s.name() + ": metric is not Einstein to tolerance");
  Metric<Interval> gi{m.x1, Interval(m.x2.lo, m.x2.hi), Interval(1)};
  return certify(s, gi, m.approx);
}

StabilityReport instability_certificate(const AlignedSpace& s, const DiagonalMetric& g) {
  curvature::require_positive(g);
  auto [u, v] = curvature::einstein_residual(s, g);
  if (std::max(exact::abs(u), exact::abs(v)) > einstein::residual_tolerance())
    throw std::invalid_argument(s.name() + ": metric is not Einstein to tolerance");
  Metric<Interval> gi{Interval(g.x1), Interval(g.x2), Interval(g.x3)};
  return certify(s, gi, g);
}

}  // namespace aligned::stability
