#include "aligned/cli/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "aligned/cli/parallel.hpp"
#include "aligned/cli/report.hpp"
#include "aligned/einstein/einstein.hpp"
#include "aligned/families/families.hpp"

namespace aligned::cli {

using nlohmann::ordered_json;
using spaces::TableRow;

namespace {

bool selected(const std::string& table, const TableRow& r) { return table == "all" || r.table == table; }

const spaces::CatalogSpace& find_sporadic(const spaces::ClassC& cls, const TableRow& r) {
  for (const auto& c : cls.sporadic)
    if (c.K == r.K && ((c.G1 == r.G1 && c.G2 == r.G2) || (c.G1 == r.G2 && c.G2 == r.G1))) return c;
  throw std::runtime_error("row " + r.table + ":" + std::to_string(r.row) + " (" + r.G1 + " x " + r.G2 + " / " + r.K +
                           ") is not a class C space of the catalog");
}

}  // namespace

TableReport run_tables(const spaces::Catalog& cat, const std::string& table, unsigned threads, long m_probe_extra) {
  if (table != "all" && table != "flies" && table != "sym" && table != "spo" && table != "spo2")
    throw std::invalid_argument("unknown table '" + table + "' (flies, sym, spo, spo2, all)");
  const spaces::ClassC cls = spaces::enumerate_class_C(cat);

  std::vector<const TableRow*> rows;
  std::vector<std::string> family_names;
  for (const auto& r : cat.rows) {
    if (!selected(table, r)) continue;
    rows.push_back(&r);
    if (r.kind == TableRow::Kind::kFamily &&
        std::find(family_names.begin(), family_names.end(), r.family) == family_names.end())
      family_names.push_back(r.family);
  }

  // Family certificates are the expensive part; compute each once.
  std::vector<families::FamilyVerdict> fam(family_names.size());
  parallel_for(family_names.size(), threads, [&](std::size_t i) {
    const auto* f = cat.find_family(family_names[i]);
    if (!f) throw std::runtime_error("unknown family '" + family_names[i] + "'");
    fam[i] = families::certify_family(*f, f->m_min + m_probe_extra);
  });
  auto family_of = [&](const std::string& name) -> const families::FamilyVerdict& {
    return fam[std::find(family_names.begin(), family_names.end(), name) - family_names.begin()];
  };

  const Rational eps = exact::make_rational(1, 10000000000LL);
  TableReport rep;
  rep.rows.resize(rows.size());
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const TableRow& r = *rows[i];
    RowResult& out = rep.rows[i];
    out.row = r;
    if (r.kind == TableRow::Kind::kFamily) {
      const auto& v = family_of(r.family);
      const auto* f = cat.find_family(r.family);
      out.identifier = r.family;
      out.computed = v.per_m.back().second;
      out.detail = v.existence.to_string();
      out.match = r.table == "flies" ? v.existence == f->expected : out.computed == r.expect_exists;
      return;
    }
    AlignedSpace s = r.kind == TableRow::Kind::kInstance ? cat.find_family(r.family)->instantiate(r.m)
                                                          : find_sporadic(cls, r).space;
    einstein::EinsteinVerdict v = einstein::solve_semisimple(s, eps);
    out.identifier = r.kind == TableRow::Kind::kInstance ? r.name : s.name();
    out.computed = v.exists;
    out.detail = std::to_string(v.metrics.size()) + " metric(s)";
    out.match = out.computed == r.expect_exists;
  });

  for (const auto& r : rep.rows) {
    if (!r.match) ++rep.mismatches;
    if (r.row.table == "flies") {
      ++rep.family_total;
      rep.family_exists += r.computed;
    } else if (r.row.kind == TableRow::Kind::kSpace) {
      ++rep.sporadic_total;
      rep.sporadic_exists += r.computed;
    }
  }
  return rep;
}

ordered_json table_json(const TableReport& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json rows = ordered_json::array();
  for (const auto& x : r.rows) {
    ordered_json row;
    row["table"] = x.row.table;
    row["row"] = x.row.row;
    row["identifier"] = x.identifier;
    row["exists"] = x.computed;
    row["detail"] = x.detail;
    row["match"] = x.match;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["summary"] = {{"sporadic_exists", r.sporadic_exists},
                  {"sporadic_total", r.sporadic_total},
                  {"family_exists", r.family_exists},
                  {"family_total", r.family_total},
                  {"mismatches", r.mismatches}};
  return j;
}

std::string render_table_text(const TableReport& r) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-6s %4s  %-34s %-7s %-14s %s\n", "table", "row", "space", "exists", "detail", "check");
  out << buf;
  for (const auto& x : r.rows) {
    std::snprintf(buf, sizeof buf, "%-6s %4d  %-34s %-7s %-14s %s\n", x.row.table.c_str(), x.row.row,
                  x.identifier.c_str(), x.computed ? "yes" : "no", x.detail.c_str(), x.match ? "ok" : "MISMATCH");
    out << buf;
  }
  if (r.sporadic_total) out << "sporadic: " << r.sporadic_exists << "/" << r.sporadic_total << " admit Einstein metrics\n";
  if (r.family_total) out << "families: " << r.family_exists << "/" << r.family_total << " admit Einstein metrics for large m\n";
  out << "mismatches: " << r.mismatches << "\n";
  return out.str();
}

}  // namespace aligned::cli
