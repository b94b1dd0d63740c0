// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "aligned/cli/tables.hpp"
#include "aligned/curvature/ricci.hpp"
#include "aligned/einstein/einstein.hpp"
#include "aligned/families/families.hpp"
#include "aligned/spaces/catalog.hpp"
#include "aligned/stability/stability.hpp"
#include "newton_oracle.hpp"

using namespace aligned;
using exact::make_rational;
using exact::parse_rational;
using exact::Rational;
using exact::to_double;
using spaces::AlignedSpace;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const Rational kEps = make_rational(1, 10000000000LL);

AlignedSpace g2sp2() { return AlignedSpace::semisimple("G2xSp2_SU2", 11, 7, 3, make_rational(1, 56), make_rational(1, 15)); }
AlignedSpace su5su4() { return AlignedSpace::semisimple("SU5xSU4_Sp2", 14, 5, 10, make_rational(3, 10), make_rational(3, 4)); }
AlignedSpace su5so8() { return spaces::abelian_space("SU5xSO8_T4", 1, 1, make_rational(1, 5), make_rational(1, 6), 20, 24, 4); }

const spaces::Catalog& catalog() {
  static const spaces::Catalog cat = spaces::load_catalog(spaces::default_catalog_path());
  return cat;
}
const spaces::ClassC& class_c() {
  static const spaces::ClassC cls = spaces::enumerate_class_C(catalog());
  return cls;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Every semisimple space the sweep touches: sporadic spaces plus family
// members m_min .. m_min + 10.
std::vector<AlignedSpace> semisimple_sweep() {
  std::vector<AlignedSpace> out;
  for (const auto& c : class_c().sporadic) out.push_back(c.space);
  for (const auto& f : class_c().families)
    for (long m = f.m_min; m <= f.m_min + 10; ++m) out.push_back(f.instantiate(m));
  out.push_back(g2sp2());
  out.push_back(su5su4());
  return out;
}

std::vector<AlignedSpace> abelian_sweep() {
  std::vector<AlignedSpace> out{su5so8()};
  for (const auto& t : catalog().abelian_templates) {
    long n1 = 0, n2 = 0, d = 0;
    t.dimensions(std::max(t.m_min, 1L), n1, n2, d);
    for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}})
      out.push_back(spaces::abelian_space(t.name, p, q, make_rational(d, n1), make_rational(d, n2), n1, n2, d));
  }
  return out;
}

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  einstein::QuarticData q = einstein::assemble_quartic(g2sp2());
  const double t21 = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  einstein::QuarticData r = einstein::assemble_quartic(su5su4());
  const double t29 = ms_since(t0);
  bool ok = q.a == parse_rational("371645834625/48358655787008") &&
            q.b == parse_rational("-15992045085375/96717311574016") &&
            q.c == parse_rational("18067869653625/96717311574016") && q.d == parse_rational("-1649818125/26985857024") &&
            q.e == parse_rational("455625/30118144");
  ok = ok && r.a == parse_rational("223293/390625") && r.b == parse_rational("-524104/390625") &&
       r.c == parse_rational("455406/390625") && r.d == parse_rational("-37128/78125") &&
       r.e == parse_rational("1521/15625");
  ok = ok && t21 < 1 && t29 < 1;
  char buf[160];
  std::snprintf(buf, sizeof buf, "exact a..e for G2xSp2_SU2 and SU5xSU4_Sp2 (%.3f ms, %.3f ms)", t21, t29);
  return {ok, buf};
}

Outcome criterion2() {
  auto close = [](const Rational& x, const char* quoted) {
    const Rational p = parse_rational(quoted);
    return exact::abs(x - p) <= exact::abs(p) * make_rational(1, 1000000000);
  };
  auto a = einstein::classify(g2sp2()).invariants.value();
  auto b = einstein::classify(su5su4()).invariants.value();
  bool ok = close(a.delta, "-1.495938639e-6") && close(a.R, "-0.001656504408") && close(a.S, "-0.07053475834") &&
            close(b.delta, "0.0001962504947") && close(b.R, "0.1971272177") && close(b.S, "-0.06909613037");
  return {ok, "delta, R, S of G2xSp2_SU2 and SU5xSU4_Sp2 within 1e-9 relative"};
}

Outcome criterion3() {
  auto v = einstein::solve_abelian(su5so8(), kEps);
  const auto& m = v.metrics.at(0);
  const double x1 = to_double(m.approx.x1), x2 = to_double(m.approx.x2);
  const double u0 = std::sqrt(2 * x2 - 1);
  bool ok = v.metrics.size() == 1 && std::abs(u0 - 0.8405) <= 5e-4 && std::abs(x1 - 0.8791) <= 5e-4 &&
            std::abs(x2 - 0.8532) <= 5e-4 && einstein::abelian_cubic_discriminant(su5so8()) == make_rational(-2323, 588);
  char buf[160];
  std::snprintf(buf, sizeof buf, "u0=%.6f g=(%.6f, %.6f, 1), discriminant %s", u0, x1, x2,
                exact::to_string(einstein::abelian_cubic_discriminant(su5so8())).c_str());
  return {ok, buf};
}

Outcome criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  cli::TableReport r = cli::run_tables(catalog(), "all", 1);
  const double secs = ms_since(t0) / 1000;
  std::map<std::string, std::pair<int, int>> per;  // rows, exists
  std::ostringstream bad;
  for (const auto& x : r.rows) {
    auto& p = per[x.row.table];
    ++p.first;
    p.second += x.computed;
    if (!x.match) bad << " " << x.row.table << " row " << x.row.row << " (" << x.identifier << ": " << x.detail << ")";
  }
  bool ok = per["flies"].first == 12 && per["sym"].first == 7 && per["spo"] == std::pair{24, 16} &&
            per["spo2"] == std::pair{41, 35} && r.sporadic_exists == 52 && r.sporadic_total == 70 &&
            r.family_exists == 9 && r.family_total == 12 && r.mismatches == 0 && secs < 60;
  std::ostringstream d;
  d << "sporadic " << r.sporadic_exists << "/" << r.sporadic_total << ", families " << r.family_exists << "/"
    << r.family_total << ", spo " << per["spo"].second << "/24, spo2 " << per["spo2"].second << "/41, " << r.mismatches
    << " mismatch(es)" << bad.str();
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.1f s", secs);
  return {ok, d.str() + buf};
}

Outcome criterion5() {
  const auto* f = catalog().find_family("SUm_SOm1_SOm");
  auto fi = families::family_invariants(*f);
  auto lin = [](int a, int b) { return exact::UniPoly{Rational(b), Rational(a)}; };
  auto q1 = families::extract_cofactor(fi.delta.num(), {{lin(1, 2), 4}, {lin(1, -1), 12}, {lin(3, -2), 2},
                                                         {lin(1, 1), 3}, {lin(3, -1), 12}});
  auto q2 = families::extract_cofactor(fi.R.num(), {{lin(1, -1), 6}, {lin(3, -1), 10}});
  auto q3 = families::extract_cofactor(fi.S.num(), {{lin(3, -1), 6}, {lin(1, -1), 4}});
  const bool pos = families::certified_positive_from(q1, 6) && families::certified_positive_from(q2, 6) &&
                   families::certified_positive_from(q3, 6);
  const auto v = families::certify_family(*f, 20);
  bool ok = q1.degree() == 11 && q2.degree() == 16 && q3.degree() == 6 && pos && v.existence.to_string() == "none";
  std::ostringstream d;
  d << "cofactor degrees " << q1.degree() << ", " << q2.degree() << ", " << q3.degree()
    << (pos ? ", Sturm-certified positive for m >= 6" : ", positivity NOT certified") << ", family verdict "
    << v.existence.to_string();
  return {ok, d.str()};
}

Outcome criterion6() {
  int metrics = 0, discarded = 0, bad = 0;
  std::ostringstream why;
  auto inside = [](const AlignedSpace& s, const Rational& lo, const Rational& hi) {
    if (s.is_abelian()) return s.c1() * lo > 1;
    auto [wlo, whi] = s.admissible() ? einstein::bounds_E5(s) : einstein::positivity_window(s);
    return wlo < lo && hi < whi;
  };
  std::vector<AlignedSpace> all = semisimple_sweep();
  for (const auto& s : abelian_sweep()) all.push_back(s);
  for (const auto& s : all) {
    auto v = einstein::solve(s, kEps);
    for (const auto& m : v.metrics) {
      ++metrics;
      if (m.residual > einstein::residual_tolerance() || !inside(s, m.x2.lo, m.x2.hi)) {
        ++bad;
        why << " " << s.name();
      }
    }
    for (const auto& d : v.discarded) {
      ++discarded;
      const double x2 = to_double(d.x2.mid());
      bool fails = true;
      if (!s.is_abelian()) {
        const auto& q = *v.quartic;
        const double qv = to_double(q.q()(d.x2.mid()));
        const double x1 = to_double(q.x1_numerator()(d.x2.mid())) / (to_double(q.B) * qv);
        if (qv > 0 && x1 > 0) {
          auto [a, b] = curvature::einstein_residual(s, curvature::Metric<double>{x1, x2, 1});
          fails = std::abs(a) + std::abs(b) > 1e-8;
        }
      }
      if (!fails || d.reason.empty()) {
        ++bad;
        why << " " << s.name() << "(discard)";
      }
    }
  }
  std::ostringstream d;
  d << metrics << " metrics on " << all.size() << " spaces within residual 1e-12 and bounds, " << discarded
    << " discarded roots all failing a filter" << why.str();
  return {bad == 0 && metrics > 0, d.str()};
}

Outcome criterion7() {
  int total = 0, empty = 0, matched = 0;
  std::vector<const spaces::CatalogSpace*> pick;
  for (const auto& c : class_c().sporadic) {
    const bool exists = einstein::classify(c.space).exists;
    if ((exists && total - empty < 7) || (!exists && empty < 3)) {
      pick.push_back(&c);
      ++total;
      empty += !exists;
    }
    if (total == 10) break;
  }
  std::ostringstream miss;
  for (const auto* c : pick) {
    auto v = einstein::solve_semisimple(c->space, kEps);
    auto pts = oracle::newton_solutions(*v.quartic, oracle::search_box(c->space));
    if (oracle::same_metrics(pts, v.metrics)) ++matched;
    else miss << " " << c->space.name();
  }
  std::ostringstream d;
  d << matched << "/" << total << " spaces (" << empty << " without metrics) match within 1e-6" << miss.str();
  return {total == 10 && empty >= 3 && matched == total, d.str()};
}

Outcome criterion8() {
  int count = 0, bad = 0;
  for (const auto& s : semisimple_sweep()) {
    for (const auto& m : einstein::solve_semisimple(s, kEps).metrics) {
      ++count;
      if (!(stability::instability_certificate(s, m).witness_L22.lo() > 0)) ++bad;
    }
  }
  auto ab = einstein::solve_abelian(su5so8(), kEps);
  auto rep = stability::instability_certificate(su5so8(), ab.metrics.at(0));
  const bool saddle = rep.witness_L33 && rep.witness_L33->hi() < 0 && rep.verdict == stability::Verdict::kSaddle;

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 80), num(1, 97);
  int kernel_ok = 0;
  const auto& spor = class_c().sporadic;
  for (int k = 0; k < 100; ++k) {
    AlignedSpace s = k % 2 ? spor[k % spor.size()].space
                           : AlignedSpace::semisimple("r", dim(rng), dim(rng), dim(rng), make_rational(num(rng), 101),
                                                      make_rational(num(rng), 101));
    curvature::DiagonalMetric g{make_rational(num(rng), 13), make_rational(num(rng), 17), make_rational(num(rng), 19)};
    auto L = stability::hessian_L(s, g);
    auto img = L.kernel_image();
    kernel_ok += img[0] == 0 && img[1] == 0 && img[2] == 0;
  }
  std::ostringstream d;
  d << count - bad << "/" << count << " metrics with 2rho - L22 > 0; SU5xSO8_T4 "
    << (saddle ? "saddle (2rho - L33 < 0)" : "NOT a certified saddle") << "; kernel identity " << kernel_ok << "/100";
  return {bad == 0 && count > 0 && saddle && kernel_ok == 100, d.str()};
}

Outcome criterion9() {
  std::vector<AlignedSpace> spaces;
  const auto& spor = class_c().sporadic;
  for (std::size_t i = 0; spaces.size() < 20; i += 3) spaces.push_back(spor[i % spor.size()].space);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(1, 60);
  int equal = 0;
  for (const auto& s : spaces) {
    for (int k = 0; k < 5; ++k) {
      curvature::DiagonalMetric g{make_rational(num(rng), 7), make_rational(num(rng), 11), make_rational(num(rng), 13)};
      auto a = curvature::ricci_eigenvalues(s, g);
      auto b = curvature::ricci_casimir_form(s, g);
      equal += a.r1 == b.r1 && a.r2 == b.r2 && a.r3 == b.r3;
    }
  }
  std::ostringstream d;
  d << equal << "/100 (space, metric) pairs with exactly equal eigenvalues";
  return {equal == 100, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"exact coefficient reproduction", criterion1}, {"invariant values", criterion2},
      {"abelian solve", criterion3},                  {"full-table regression", criterion4},
      {"family certification", criterion5},           {"residual property suite", criterion6},
      {"oracle equivalence", criterion7},             {"stability", criterion8},
      {"cross-formula consistency", criterion9},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed;
}
