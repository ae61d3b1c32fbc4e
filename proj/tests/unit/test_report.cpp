#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>

#include "fockgauss/experiments.hpp"
#include "fockgauss/report.hpp"

using namespace fockgauss;

TEST_CASE("exit codes: residual failures take precedence over assertions") {
  Report ok("x");
  ok.assert_le("a", 1.0, 2.0);
  ok.residual("r", 1e-9, 1e-8);
  ok.info("i", 5);
  CHECK(ok.exit_code() == 0);
  Report assertion("x");
  assertion.assert_ge("a", 1.0, 2.0);
  CHECK(assertion.exit_code() == 3);
  Report both("x");
  both.assert_true("a", false, "no");
  both.residual("r", 1.0, 1e-8);
  CHECK(both.exit_code() == 4);
  CHECK_FALSE(both.pass());
}

TEST_CASE("payload layout, non-finite values and CSV") {
  Report r("demo");
  r.param("n", 2);
  r.note("convention", "sum of norms");
  r.assert_le("nan metric", std::numeric_limits<double>::quiet_NaN(), 1.0);
  r.residual("res", 0.5, 1.0);
  auto& t = r.table("rows");
  t.columns = {"a", "b"};
  t.rows = {{1.0, 2.5}, {3.0, -4.0}};
  const auto p = r.payload();
  CHECK(p.at("experiment") == "demo");
  CHECK(p.at("params").at("n") == 2);
  CHECK(p.at("metrics").size() == 2);
  CHECK(p.at("metrics")[0].at("value") == "nan");
  CHECK(p.at("metrics")[0].at("pass") == false);
  CHECK(p.at("residuals").at("res").at("value") == 0.5);
  CHECK(p.at("residuals").at("res").at("tolerance") == 1.0);
  CHECK_FALSE(p.contains("header"));
  const auto d = r.document("2026-01-01T00:00:00Z");
  CHECK(d.at("header").at("schema_version") == kReportSchemaVersion);
  CHECK(r.csv("rows") == "a,b\n1,2.5\n3,-4\n");
  const auto dir = std::filesystem::temp_directory_path() / "fockgauss_report_test";
  std::filesystem::remove_all(dir);
  r.write(dir.string(), "t");
  CHECK(std::filesystem::exists(dir / "demo.json"));
  CHECK(std::filesystem::exists(dir / "demo_rows.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("experiment catalog and deterministic payloads") {
  const auto& cat = experiment_catalog();
  CHECK(cat.size() == 15);
  CHECK(find_experiment("isometry") != nullptr);
  CHECK(find_experiment("nope") == nullptr);
  RunOptions o;
  o.seed = 77;
  const Experiment& e = *find_experiment("lemma44");
  CHECK(run_experiment(e, o).payload().dump() == run_experiment(e, o).payload().dump());
  RunOptions other = o;
  other.seed = 78;
  CHECK(run_experiment(e, o).payload().dump() != run_experiment(e, other).payload().dump());
  RunOptions bad;
  bad.config.symbol = "sin(";
  CHECK_THROWS_AS(run_experiment(*find_experiment("sphi-invert"), bad), ConfigError);
}
