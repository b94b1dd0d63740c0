#include <doctest.h>

#include <cmath>
#include <random>

#include "aligned/curvature/ricci.hpp"
#include "aligned/spaces/catalog.hpp"

using namespace aligned::curvature;
using aligned::exact::make_rational;
using aligned::exact::Rational;
using aligned::spaces::AlignedSpace;

namespace {

AlignedSpace g2sp2() { return AlignedSpace::semisimple("G2xSp2_SU2", 11, 7, 3, make_rational(1, 56), make_rational(1, 15)); }
AlignedSpace su5su4() { return AlignedSpace::semisimple("SU5xSU4_Sp2", 14, 5, 10, make_rational(3, 10), make_rational(3, 4)); }
AlignedSpace su5so8() {
  return aligned::spaces::abelian_space("SU5xSO8_T4", 1, 1, make_rational(1, 5), make_rational(1, 6), 20, 24, 4);
}

std::vector<AlignedSpace> catalog_sample(std::size_t count) {
  using namespace aligned::spaces;
  static const ClassC cls = enumerate_class_C(load_catalog(default_catalog_path()));
  std::vector<AlignedSpace> out;
  for (std::size_t i = 0; i < cls.sporadic.size() && out.size() < count - 4; i += 4) out.push_back(cls.sporadic[i].space);
  for (std::size_t i = 0; out.size() < count; i += 3) {
    const auto& f = cls.families[i];
    out.push_back(f.instantiate(f.m_min + 2));
  }
  return out;
}

}  // namespace

TEST_CASE("structural constants") {
  StructuralConstants t = structural_constants(g2sp2());
  CHECK(t.t111 == make_rational(143, 28));
  CHECK(t.t223 == make_rational(784, 355));
  auto sym = AlignedSpace::semisimple("sym", 5, 5, 3, make_rational(1, 6), make_rational(1, 6));
  CHECK(sym.kappa1() == make_rational(1, 2));
  CHECK(structural_constants(sym).t111 == 0);
  CHECK(structural_constants(sym).t222 == 0);
  CHECK(structural_constants(su5so8()).t333 == 0);
}

TEST_CASE("Ricci eigenvalues at the standard metric") {
  DiagonalMetric g{1, 1, 1};
  Ricci<Rational> r = ricci_eigenvalues(su5su4(), g);
  CHECK(r.r1 == make_rational(3, 7));  // 1/2 - (2/5)(1/2)/(2 * 7/5)
  CHECK(r.r2 == make_rational(9, 28));
  CHECK(scalar_curvature(su5su4(), g) == 14 * r.r1 + 5 * r.r2 + 10 * r.r3);
  auto [u, v] = einstein_residual(g2sp2(), g);
  CHECK((u != 0 || v != 0));
  CHECK_THROWS_AS(require_positive(DiagonalMetric{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("homogeneity of degree -1") {
  const Rational t = make_rational(7, 3);
  for (const AlignedSpace& s : {g2sp2(), su5su4(), su5so8()}) {
    DiagonalMetric g{make_rational(3, 2), make_rational(4, 5), make_rational(6, 7)};
    DiagonalMetric tg{t * g.x1, t * g.x2, t * g.x3};
    Ricci<Rational> a = ricci_eigenvalues(s, g), b = ricci_eigenvalues(s, tg);
    CHECK(b.r1 == a.r1 / t);
    CHECK(b.r2 == a.r2 / t);
    CHECK(b.r3 == a.r3 / t);
    CHECK(scalar_curvature(s, tg) == scalar_curvature(s, g) / t);
    auto [u, v] = einstein_residual(s, g);
    auto [ut, vt] = einstein_residual(s, tg);
    CHECK(ut == u / t);
    CHECK(vt == v / t);
  }
}

TEST_CASE("three Ricci routes agree exactly on catalog spaces") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 40);
  std::vector<AlignedSpace> spaces = catalog_sample(20);
  spaces.push_back(su5so8());
  REQUIRE(spaces.size() == 21);
  for (const AlignedSpace& s : spaces) {
    for (int k = 0; k < 5; ++k) {
      DiagonalMetric g{make_rational(num(rng), 13), make_rational(num(rng), 11), make_rational(num(rng), 17)};
      Ricci<Rational> a = ricci_eigenvalues(s, g);
      Ricci<Rational> b = ricci_casimir_form(s, g);
      CHECK(a.r1 == b.r1);
      CHECK(a.r2 == b.r2);
      CHECK(a.r3 == b.r3);
      if (s.is_abelian()) continue;  // structural route needs the actual n_i
      Ricci<Rational> c = ricci_from_structure(s, g);
      CHECK(a.r1 == c.r1);
      CHECK(a.r2 == c.r2);
      CHECK(a.r3 == c.r3);
    }
  }
  // The abelian example's dimensions satisfy kappa_i n_i = d.
  Ricci<Rational> a = ricci_eigenvalues(su5so8(), DiagonalMetric{2, 3, 5});
  Ricci<Rational> c = ricci_from_structure(su5so8(), DiagonalMetric{2, 3, 5});
  CHECK(a.r3 == c.r3);
  CHECK(a.r1 == c.r1);
}

TEST_CASE("interval and double evaluation enclose the exact value") {
  DiagonalMetric g{make_rational(7, 8), make_rational(6, 7), 1};
  Ricci<Rational> r = ricci_eigenvalues(g2sp2(), g);
  Metric<Interval> gi{Interval(g.x1), Interval(make_rational(5, 6), make_rational(7, 8)), Interval(1)};
  Ricci<Interval> ri = ricci_eigenvalues(g2sp2(), gi);
  CHECK(ri.r2.contains(r.r2));
  Ricci<double> rd = ricci_eigenvalues(g2sp2(), Metric<double>{0.875, 6.0 / 7, 1});
  CHECK(rd.r3 == doctest::Approx(aligned::exact::to_double(r.r3)).epsilon(1e-14));
}

TEST_CASE("SU5xSO8_T4 metric is nearly Einstein at four digits") {
  DiagonalMetric g{make_rational(8791, 10000), make_rational(8532, 10000), 1};
  auto [u, v] = einstein_residual(su5so8(), g);
  CHECK(aligned::exact::abs(u) < make_rational(1, 1000));
  CHECK(aligned::exact::abs(v) < make_rational(1, 1000));
}

TEST_CASE("landscape grid") {
  auto pts = landscape_grid(g2sp2(), 1, 1, 1, 1, 2);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].x3 == doctest::Approx(1.0));
  CHECK(pts[0].scal == doctest::Approx(aligned::exact::to_double(scalar_curvature(g2sp2(), DiagonalMetric{1, 1, 1}))));

  auto a = landscape_grid(su5su4(), 0.2, 3, 0.2, 3, 40, 1);
  auto b = landscape_grid(su5su4(), 0.2, 3, 0.2, 3, 40, 4);
  REQUIRE(a.size() == 1600);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::isfinite(a[i].scal));
    CHECK(a[i].scal == b[i].scal);
    CHECK(a[i].x1 == b[i].x1);
  }
  CHECK(a[1].x1 == a[0].x1);  // x1 is the outer index
  CHECK(a[1].x2 > a[0].x2);
  const double vol = std::pow(a[77].x1, 14) * std::pow(a[77].x2, 5) * std::pow(a[77].x3, 10);
  CHECK(vol == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(landscape_grid(g2sp2(), 0, 1, 1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(landscape_grid(g2sp2(), 2, 1, 1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(landscape_grid(g2sp2(), 1, 2, 1, 2, 1), std::invalid_argument);
}
