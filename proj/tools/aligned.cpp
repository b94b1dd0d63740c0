// aligned: Einstein metrics on aligned homogeneous spaces G1 x G2 / K.
//
// Exit codes: 0 exists, 3 does not exist, 2 usage or input error,
// 4 verification mismatch, 1 internal error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "aligned/cli/report.hpp"
#include "aligned/cli/tables.hpp"
#include "aligned/curvature/ricci.hpp"

using namespace aligned;
using cli::ExitCode;
using exact::Rational;
using nlohmann::ordered_json;

namespace {

struct Global {
  std::string catalog;
  bool json = false;
  int digits = 10;
  std::string eps = "1e-10";
  unsigned threads = 0;
  bool timing = false;
};

struct SpaceArgs {
  std::string space;
  std::optional<long> n1, n2, d;
  std::string a1, a2, c1, k1, k2;
  bool abelian = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned thread_count(const Global& g) {
  return g.threads ? g.threads : std::max(1u, std::thread::hardware_concurrency());
}

spaces::Catalog load(const Global& g) {
  return spaces::load_catalog(g.catalog.empty() ? spaces::default_catalog_path() : g.catalog);
}

void add_space_options(CLI::App* cmd, SpaceArgs& a) {
  cmd->add_option("--space", a.space, "catalog identifier, abelian example, or FAMILY:m");
  cmd->add_option("--n1", a.n1, "dim p1");
  cmd->add_option("--n2", a.n2, "dim p2");
  cmd->add_option("--d", a.d, "dim K");
  cmd->add_option("--a1", a.a1, "Killing constant of K in G1 (N/D)");
  cmd->add_option("--a2", a.a2, "Killing constant of K in G2 (N/D)");
  cmd->add_flag("--abelian", a.abelian, "K is a torus; give --c1 --k1 --k2");
  cmd->add_option("--c1", a.c1, "c1 > 1 (abelian K)");
  cmd->add_option("--k1", a.k1, "Casimir constant on p1 (abelian K)");
  cmd->add_option("--k2", a.k2, "Casimir constant on p2 (abelian K)");
}

Rational rational_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  try {
    return exact::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

spaces::AlignedSpace build_space(const Global& g, const SpaceArgs& a) {
  if (!a.space.empty()) {
    spaces::Catalog cat = load(g);
    return cli::resolve_space(cat, spaces::enumerate_class_C(cat), a.space);
  }
  if (!a.n1 || !a.n2 || !a.d) throw UsageError("give --space or all of --n1 --n2 --d");
  if (a.abelian)
    return spaces::AlignedSpace::abelian("custom", *a.n1, *a.n2, *a.d, rational_arg(a.c1, "--c1"),
                                         rational_arg(a.k1, "--k1"), rational_arg(a.k2, "--k2"));
  return spaces::AlignedSpace::semisimple("custom", *a.n1, *a.n2, *a.d, rational_arg(a.a1, "--a1"),
                                          rational_arg(a.a2, "--a2"));
}

void emit(const Global& g, ordered_json j, const std::string& text, double seconds) {
  if (g.timing) j["timing_ms"] = std::round(seconds * 1e4) / 10;
  if (g.json) std::cout << j.dump(2) << "\n";
  else {
    std::cout << text;
    if (g.timing) std::printf("time: %.1f ms\n", seconds * 1e3);
  }
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_space(const Global& g, const SpaceArgs& a, bool with_stability) {
  auto t0 = std::chrono::steady_clock::now();
  spaces::AlignedSpace s = build_space(g, a);
  cli::ReportOptions opt;
  opt.digits = g.digits;
  opt.eps = rational_arg(g.eps, "--eps");
  if (opt.eps <= 0) throw UsageError("--eps must be positive");
  opt.stability = with_stability;
  ordered_json j = cli::space_report(s, opt);
  emit(g, j, cli::render_space_text(j), since(t0));
  return j["verdict"]["exists"].get<bool>() ? ExitCode::kExists : ExitCode::kNotExists;
}

int cmd_table(const Global& g, const std::string& table, bool verify) {
  auto t0 = std::chrono::steady_clock::now();
  cli::TableReport r = cli::run_tables(load(g), table, thread_count(g));
  emit(g, cli::table_json(r), cli::render_table_text(r), since(t0));
  return verify && r.mismatches ? ExitCode::kMismatch : ExitCode::kExists;
}

int cmd_family(const Global& g, const std::string& name, std::optional<long> probe, bool verify) {
  auto t0 = std::chrono::steady_clock::now();
  spaces::Catalog cat = load(g);
  const spaces::FamilySpec* f = cat.find_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  families::FamilyVerdict v = families::certify_family(*f, probe.value_or(f->m_min + 30));
  ordered_json j = cli::family_report(*f, v);
  emit(g, j, cli::render_family_text(j), since(t0));
  if (verify && !(v.existence == f->expected)) return ExitCode::kMismatch;
  return v.per_m.back().second ? ExitCode::kExists : ExitCode::kNotExists;
}

int cmd_landscape(const Global& g, const SpaceArgs& a, double lo, double hi, int steps, const std::string& path) {
  spaces::AlignedSpace s = build_space(g, a);
  if (!(lo > 0) || !(hi > lo)) throw UsageError("need 0 < --xmin < --xmax");
  if (steps < 2) throw UsageError("--steps must be at least 2");
  auto grid = curvature::landscape_grid(s, lo, hi, lo, hi, steps, thread_count(g));
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  }
  std::ostream& out = path.empty() ? std::cout : file;
  char buf[160];
  out << "x1,x2,x3,scal\n";
  for (const auto& p : grid) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", p.x1, p.x2, p.x3, p.scal);
    out << buf;
  }
  // Einstein metrics, rescaled onto the unit-volume slice of the grid.
  einstein::EinsteinVerdict v = einstein::solve(s, rational_arg(g.eps, "--eps"));
  for (const auto& m : v.metrics) {
    const double x1 = exact::to_double(m.approx.x1), x2 = exact::to_double(m.approx.x2);
    const double t = std::exp((s.n1() * std::log(x1) + s.n2() * std::log(x2)) / s.dimension());
    std::snprintf(buf, sizeof buf, "# einstein %.12g,%.12g,%.12g,%.12g\n", x1 / t, x2 / t, 1 / t,
                  curvature::unit_volume_scal(s, x1 / t, x2 / t));
    out << buf;
  }
  if (!out) throw std::runtime_error("write failed");
  return v.exists ? ExitCode::kExists : ExitCode::kNotExists;
}

int cmd_catalog_validate(const Global& g) {
  spaces::Catalog cat = load(g);
  spaces::ClassC cls = spaces::enumerate_class_C(cat);
  ordered_json j = {{"schema_version", cli::kSchemaVersion},
                    {"source", cat.source},
                    {"kgroups", cat.kgroups.size()},
                    {"sporadic", cls.sporadic.size()},
                    {"families", cls.families.size()},
                    {"table_rows", cat.rows.size()},
                    {"abelian_templates", cat.abelian_templates.size()}};
  std::ostringstream text;
  text << cat.source << ": ok, " << cat.kgroups.size() << " K groups, " << cls.sporadic.size() << " sporadic spaces, "
       << cls.families.size() << " families, " << cat.rows.size() << " table rows\n";
  emit(g, j, text.str(), 0);
  return ExitCode::kExists;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein metrics on aligned homogeneous spaces"};
  app.fallthrough();
  app.require_subcommand(1);
  Global g;
  app.add_option("--catalog", g.catalog, "catalog file (default: $ALIGNED_CATALOG or the bundled one)");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--digits", g.digits, "significant digits in decimal output")->check(CLI::Range(1, 60));
  app.add_option("--eps", g.eps, "width of the x2 brackets (rational)");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_flag("--timing", g.timing, "report wall time");

  SpaceArgs cls_args, solve_args, land_args;
  auto* classify = app.add_subcommand("classify", "existence verdict and metrics of one space");
  add_space_options(classify, cls_args);
  auto* solve = app.add_subcommand("solve", "metrics with stability certificates");
  add_space_options(solve, solve_args);

  std::string table = "all";
  bool table_verify = false;
  auto* tbl = app.add_subcommand("table", "recompute the classification tables");
  tbl->add_option("--table", table, "flies, sym, spo, spo2 or all");
  tbl->add_flag("--verify", table_verify, "compare with the expected verdicts");

  std::string fam_name;
  std::optional<long> probe;
  bool fam_verify = false;
  auto* fam = app.add_subcommand("family", "certify an infinite family for all m");
  fam->add_option("--name", fam_name, "family identifier")->required();
  fam->add_option("--m-probe-max", probe, "evaluate every m up to at least this");
  fam->add_flag("--verify", fam_verify, "compare with the expected existence set");

  double xmin = 0.2, xmax = 3;
  int steps = 100;
  std::string out_path;
  auto* land = app.add_subcommand("landscape", "scal on the unit-volume slice as CSV");
  add_space_options(land, land_args);
  land->add_option("--xmin", xmin, "lower end of the x1 and x2 range");
  land->add_option("--xmax", xmax, "upper end of the x1 and x2 range");
  land->add_option("--steps", steps, "samples per axis (>= 2)");
  land->add_option("--out", out_path, "output file (default stdout)");

  auto* validate = app.add_subcommand("catalog-validate", "load and cross-check the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ExitCode::kUsage;
  }

  try {
    if (*classify) return cmd_space(g, cls_args, false);
    if (*solve) return cmd_space(g, solve_args, true);
    if (*tbl) return cmd_table(g, table, table_verify);
    if (*fam) return cmd_family(g, fam_name, probe, fam_verify);
    if (*land) return cmd_landscape(g, land_args, xmin, xmax, steps, out_path);
    if (*validate) return cmd_catalog_validate(g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kUsage;
  } catch (const spaces::CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kUsage;
  } catch (const std::invalid_argument& e) {  // includes InvariantError
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return ExitCode::kInternal;
  }
  return ExitCode::kInternal;
}
