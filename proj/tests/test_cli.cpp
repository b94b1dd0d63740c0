#include <doctest.h>

#include "aligned/cli/parallel.hpp"
#include "aligned/cli/report.hpp"
#include "aligned/cli/tables.hpp"

using namespace aligned::cli;
using aligned::exact::make_rational;
using aligned::exact::parse_rational;

namespace {

const aligned::spaces::Catalog& bundled() {
  static const auto cat = aligned::spaces::load_catalog(aligned::spaces::default_catalog_path());
  return cat;
}

}  // namespace

TEST_CASE("decimal rendering") {
  CHECK(decimal(make_rational(1, 3), 4) == "0.3333");
  CHECK(decimal(make_rational(200, 3), 4) == "66.67");
  CHECK(decimal(0, 5) == "0");
  CHECK(decimal(make_rational(1, 1000000), 3) == "1.00e-06");
}

TEST_CASE("resolve_space") {
  auto cls = aligned::spaces::enumerate_class_C(bundled());
  CHECK(resolve_space(bundled(), cls, "G2xSp2_SU2").n1() == 11);
  CHECK(resolve_space(bundled(), cls, "SU5xSO8_T4").is_abelian());
  CHECK(resolve_space(bundled(), cls, "SUm_SOm1_SOm:5").a2() == make_rational(3, 4));
  CHECK_THROWS_AS(resolve_space(bundled(), cls, "nope"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_space(bundled(), cls, "SUm_SOm1_SOm:x"), std::invalid_argument);
}

TEST_CASE("report round trip") {
  auto cls = aligned::spaces::enumerate_class_C(bundled());
  for (std::size_t i = 0; i < cls.sporadic.size(); i += 7) {
    const auto& s = cls.sporadic[i].space;
    auto j = space_report(s, ReportOptions{});
    auto parsed = nlohmann::ordered_json::parse(j.dump());
    const auto& in = parsed["inputs"];
    auto again = aligned::spaces::AlignedSpace::semisimple(
        "again", in["n1"].get<long>(), in["n2"].get<long>(), in["d"].get<long>(),
        parse_rational(in["a1"].get<std::string>()), parse_rational(in["a2"].get<std::string>()));
    auto k = space_report(again, ReportOptions{});
    CHECK(k["verdict"] == parsed["verdict"]);
    CHECK(k["metrics"] == parsed["metrics"]);
    CHECK(parsed["schema_version"] == "1");
    CHECK_FALSE(parsed.contains("timing_ms"));
  }
}

TEST_CASE("table output does not depend on the thread count") {
  auto a = table_json(run_tables(bundled(), "spo2", 1));
  auto b = table_json(run_tables(bundled(), "spo2", 4));
  CHECK(a.dump() == b.dump());
  CHECK(a["summary"]["sporadic_exists"] == 35);
  CHECK_THROWS_AS(run_tables(bundled(), "nope", 1), std::invalid_argument);
}

TEST_CASE("parallel_for") {
  std::vector<int> out(100);
  parallel_for(out.size(), 8, [&](std::size_t i) { out[i] = int(i) * 2; });
  for (int i = 0; i < 100; ++i) CHECK(out[i] == 2 * i);
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 5) throw std::runtime_error("x"); }),
                  std::runtime_error);
}
