#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "aligned/spaces/catalog.hpp"

namespace aligned::cli {

struct RowResult {
  spaces::TableRow row;
  std::string identifier;
  bool computed = false;  // for family rows: exists for all large m
  std::string detail;     // existence set of a family, metric count of a space
  bool match = false;
};

struct TableReport {
  std::vector<RowResult> rows;
  int sporadic_total = 0, sporadic_exists = 0;
  int family_total = 0, family_exists = 0;
  int mismatches = 0;
};

/// Recomputes every row of `table` (flies, sym, spo, spo2 or all) in
/// catalog order. Throws std::invalid_argument for an unknown table.
TableReport run_tables(const spaces::Catalog& cat, const std::string& table, unsigned threads, long m_probe_extra = 30);

nlohmann::ordered_json table_json(const TableReport& r);
std::string render_table_text(const TableReport& r);

}  // namespace aligned::cli
