#include "aligned/cli/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aligned::cli {

using nlohmann::ordered_json;

std::string decimal(const Rational& q, int digits) {
  if (q == 0) return "0";
  const double mag = std::abs(exact::to_double(q));
  if (mag < 1e-4 || mag >= 1e9) return exact::to_scientific(q, digits);
  const int lead = static_cast<int>(std::floor(std::log10(mag)));
  return exact::to_fixed(q, std::max(0, digits - 1 - lead));
}

AlignedSpace resolve_space(const spaces::Catalog& cat, const spaces::ClassC& cls, const std::string& name) {
  for (const auto& c : cls.sporadic)
    if (c.space.name() == name) return c.space;
  if (const auto* ex = cat.find_abelian_example(name))
    return spaces::abelian_space(ex->name, ex->p, ex->q, ex->kappa1, ex->kappa2, ex->n1, ex->n2, ex->d);
  if (auto colon = name.find(':'); colon != std::string::npos) {
    if (const auto* f = cat.find_family(name.substr(0, colon))) {
      long m = 0;
      try {
        std::size_t used = 0;
        m = std::stol(name.substr(colon + 1), &used);
        if (used != name.size() - colon - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad family parameter in '" + name + "'");
      }
      return f->instantiate(m);
    }
  }
  throw std::invalid_argument("unknown space '" + name + "'");
}

namespace {

ordered_json bracket(const Rational& lo, const Rational& hi) {
  return ordered_json::array({exact::to_string(lo), exact::to_string(hi)});
}


}  // namespace

ordered_json space_report(const AlignedSpace& s, const ReportOptions& opt) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["space"] = s.name();
  j["kind"] = s.is_abelian() ? "abelian" : "semisimple";
  ordered_json in;
  in["n1"] = s.n1();
  in["n2"] = s.n2();
  in["d"] = s.d();
  if (s.is_abelian()) {
    in["c1"] = exact::to_string(s.c1());
    in["k1"] = exact::to_string(s.kappa1());
    in["k2"] = exact::to_string(s.kappa2());
  } else {
    in["a1"] = exact::to_string(s.a1());
    in["a2"] = exact::to_string(s.a2());
    j["swapped"] = s.swapped();
    j["admissible"] = s.admissible();
  }
  j["inputs"] = in;
  j["constants"] = {{"c1", exact::to_string(s.c1())},
                    {"c2", exact::to_string(s.c2())},
                    {"lambda", exact::to_string(s.lambda())},
                    {"kappa1", exact::to_string(s.kappa1())},
                    {"kappa2", exact::to_string(s.kappa2())}};

  einstein::EinsteinVerdict v = einstein::solve(s, opt.eps);
  ordered_json verdict;
  verdict["exists"] = v.exists;
  verdict["metric_count"] = v.metrics.size();
  verdict["rule"] = einstein::to_string(v.rule);
  if (v.invariants) {
    verdict["signs"] = {{"delta", v.sign_delta}, {"R", v.sign_R}, {"S", v.sign_S}, {"T", v.sign_T}};
  }
  j["verdict"] = verdict;
  if (v.quartic) {
    const auto& q = *v.quartic;
    j["quartic"] = {{"a", exact::to_string(q.a)}, {"b", exact::to_string(q.b)}, {"c", exact::to_string(q.c)},
                    {"d", exact::to_string(q.d)}, {"e", exact::to_string(q.e)}};
    const auto& inv = *v.invariants;
    j["invariants"] = {{"delta", exact::to_scientific(inv.delta, opt.digits)},
                       {"R", exact::to_scientific(inv.R, opt.digits)},
                       {"S", exact::to_scientific(inv.S, opt.digits)},
                       {"T", exact::to_scientific(inv.T, opt.digits)}};
  } else {
    j["eliminant"] = v.eliminant.to_string("x2");
    j["cubic_discriminant"] = exact::to_string(einstein::abelian_cubic_discriminant(s));
  }
  ordered_json metrics = ordered_json::array();
  for (const auto& m : v.metrics) {
    ordered_json mj;
    mj["x1"] = decimal(m.approx.x1, opt.digits);
    mj["x2"] = decimal(m.approx.x2, opt.digits);
    mj["x3"] = "1";
    mj["x1_bracket"] = bracket(m.x1.lo(), m.x1.hi());
    mj["x2_bracket"] = bracket(m.x2.lo, m.x2.hi);
    mj["multiplicity"] = m.multiplicity;
    mj["rho"] = decimal(m.rho, opt.digits);
    mj["residual"] = exact::to_scientific(m.residual, 3);
    if (opt.stability) {
      stability::StabilityReport r = stability::instability_certificate(s, m);
      ordered_json sj;
      sj["verdict"] = stability::to_string(r.verdict);
      sj["two_rho_minus_L22"] = decimal(r.witness_L22.mid(), opt.digits);
      if (r.witness_L33) sj["two_rho_minus_L33"] = decimal(r.witness_L33->mid(), opt.digits);
      sj["tangent_signs"] = r.tangent_signs;
      sj["eigen_signs"] = r.eigen_signs;
      mj["stability"] = sj;
    }
    metrics.push_back(mj);
  }
  j["metrics"] = metrics;
  ordered_json disc = ordered_json::array();
  for (const auto& d : v.discarded)
    disc.push_back({{"x2", decimal(d.x2.mid(), opt.digits)}, {"reason", d.reason}});
  j["discarded"] = disc;
  return j;
}

std::string render_space_text(const ordered_json& j) {
  std::ostringstream out;
  const auto& in = j["inputs"];
  out << j["space"].get<std::string>() << "  (" << j["kind"].get<std::string>() << ")\n";
  out << "  n1=" << in["n1"] << " n2=" << in["n2"] << " d=" << in["d"];
  if (in.contains("a1"))
    out << " a1=" << in["a1"].get<std::string>() << " a2=" << in["a2"].get<std::string>();
  else
    out << " c1=" << in["c1"].get<std::string>() << " k1=" << in["k1"].get<std::string>()
        << " k2=" << in["k2"].get<std::string>();
  out << "\n";
  const auto& c = j["constants"];
  out << "  c1=" << c["c1"].get<std::string>() << " lambda=" << c["lambda"].get<std::string>()
      << " kappa1=" << c["kappa1"].get<std::string>() << " kappa2=" << c["kappa2"].get<std::string>() << "\n";
  if (j.contains("admissible") && !j["admissible"].get<bool>()) out << "  note: a2 exceeds the admissibility bound\n";
  if (j.contains("invariants")) {
    const auto& inv = j["invariants"];
    out << "  delta=" << inv["delta"].get<std::string>() << " R=" << inv["R"].get<std::string>()
        << " S=" << inv["S"].get<std::string>() << " T=" << inv["T"].get<std::string>() << "\n";
  }
  const auto& v = j["verdict"];
  out << "  verdict: " << (v["exists"].get<bool>() ? "exists" : "does not exist") << " (" << v["rule"].get<std::string>()
      << "), " << v["metric_count"] << " metric(s)\n";
  for (const auto& m : j["metrics"]) {
    out << "  g = (" << m["x1"].get<std::string>() << ", " << m["x2"].get<std::string>() << ", 1)  rho="
        << m["rho"].get<std::string>() << "  residual=" << m["residual"].get<std::string>();
    if (m.contains("stability")) out << "  " << m["stability"]["verdict"].get<std::string>();
    out << "\n";
  }
  for (const auto& d : j["discarded"])
    out << "  discarded root x2=" << d["x2"].get<std::string>() << ": " << d["reason"].get<std::string>() << "\n";
  return out.str();
}

ordered_json family_report(const spaces::FamilySpec& f, const families::FamilyVerdict& v) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = f.name;
  j["display"] = f.display();
  j["m_min"] = f.m_min;
  j["existence"] = v.existence.to_string();
  j["expected"] = f.expected.to_string();
  j["match"] = v.existence == f.expected;
  j["checked_up_to"] = v.checked_up_to;
  j["swapped"] = v.swapped;
  ordered_json certs = ordered_json::array();
  for (const auto& c : v.certificates)
    certs.push_back({{"invariant", c.invariant},
                     {"numerator_degree", c.numerator.degree()},
                     {"denominator_degree", c.denominator.degree()},
                     {"sign_beyond", exact::to_string(c.beyond)},
                     {"tail_sign", c.tail_sign}});
  j["certificates"] = certs;
  ordered_json per = ordered_json::array();
  for (const auto& [m, e] : v.per_m) per.push_back({{"m", m}, {"exists", e}});
  j["per_m"] = per;
  return j;
}

std::string render_family_text(const ordered_json& j) {
  std::ostringstream out;
  out << j["family"].get<std::string>() << "  " << j["display"].get<std::string>() << ", m >= " << j["m_min"] << "\n";
  out << "  existence: " << j["existence"].get<std::string>() << " (table: " << j["expected"].get<std::string>() << ")"
      << (j["match"].get<bool>() ? "" : "  MISMATCH") << "\n";
  out << "  exact evaluation for m <= " << j["checked_up_to"] << "; signs frozen beyond:\n";
  for (const auto& c : j["certificates"])
    out << "    " << c["invariant"].get<std::string>() << ": sign " << (c["tail_sign"].get<int>() > 0 ? "+" : "-")
        << " for m > " << c["sign_beyond"].get<std::string>() << " (numerator degree " << c["numerator_degree"] << ")\n";
  return out.str();
}

}  // namespace aligned::cli
