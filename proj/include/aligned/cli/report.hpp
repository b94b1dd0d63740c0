#pragma once

#include <json.hpp>
#include <string>

#include "aligned/einstein/einstein.hpp"
#include "aligned/families/families.hpp"
#include "aligned/spaces/catalog.hpp"
#include "aligned/stability/stability.hpp"

namespace aligned::cli {

using exact::Rational;
using spaces::AlignedSpace;

inline constexpr const char* kSchemaVersion = "1";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExists = 0, kInternal = 1, kUsage = 2, kNotExists = 3, kMismatch = 4 };

/// `digits` significant digits, fixed notation for moderate magnitudes and
/// scientific otherwise.
std::string decimal(const Rational& q, int digits);

/// Resolves a catalog name: a sporadic identifier ("G2xSp2_SU2"), an abelian
/// example ("SU5xSO8_T4"), or a family member ("SUm_SOm1_SOm:7").
/// Throws std::invalid_argument for unknown names.
AlignedSpace resolve_space(const spaces::Catalog& cat, const spaces::ClassC& cls, const std::string& name);

struct ReportOptions {
  int digits = 10;
  Rational eps = exact::make_rational(1, 10000000000LL);
  bool stability = false;
};

/// Verdict, metrics and (optionally) stability of one space as a JSON object
/// with schema_version "1".
nlohmann::ordered_json space_report(const AlignedSpace& s, const ReportOptions& opt);

/// Human-readable rendering of space_report.
std::string render_space_text(const nlohmann::ordered_json& report);

nlohmann::ordered_json family_report(const spaces::FamilySpec& f, const families::FamilyVerdict& v);
std::string render_family_text(const nlohmann::ordered_json& report);

}  // namespace aligned::cli
