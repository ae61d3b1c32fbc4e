#pragma once

// One JSON document per experiment run:
//   {header: {schema_version, timestamp}, experiment, params, convention_notes,
//    metrics: [{name, kind, value, tolerance, pass, convention?}], residuals, pass}
// The header is the only field that varies between identical runs; payload()
// excludes it so determinism can be checked byte for byte.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fockgauss {

inline constexpr const char* kReportSchemaVersion = "fockgauss-report/1";

enum class MetricKind {
  Assertion,  // contributes to pass; failure means exit 3
  Residual,   // numerical residual against a tolerance; failure means exit 4
  Info,       // reported only
};

const char* to_string(MetricKind k) noexcept;

struct Metric {
  std::string name;
  MetricKind kind = MetricKind::Info;
  nlohmann::json value;
  std::optional<double> tolerance;
  bool pass = true;
  std::string convention;
};

/// A CSV table of a ratio family or trajectory.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

class Report {
 public:
  explicit Report(std::string experiment);

  const std::string& experiment() const noexcept { return experiment_; }

  void param(const std::string& key, nlohmann::json value) { params_[key] = std::move(value); }
  void note(const std::string& key, const std::string& text) { notes_[key] = text; }

  /// Records an assertion; returns its pass flag.
  bool assert_true(const std::string& name, bool ok, nlohmann::json value, const std::string& convention = {});
  /// value <= tolerance.
  bool assert_le(const std::string& name, double value, double tolerance, const std::string& convention = {});
  /// value >= tolerance (the tolerance acts as the floor).
  bool assert_ge(const std::string& name, double value, double floor, const std::string& convention = {});
  /// Residual metric, also listed under "residuals".
  bool residual(const std::string& name, double value, double tolerance);
  void info(const std::string& name, nlohmann::json value, const std::string& convention = {});

  Table& table(const std::string& name) { return tables_[name]; }
  void clear_tables() { tables_.clear(); }

  const std::vector<Metric>& metrics() const noexcept { return metrics_; }
  bool assertions_pass() const;
  bool residuals_pass() const;
  bool pass() const { return assertions_pass() && residuals_pass(); }
  /// 0 pass, 4 residual failure (takes precedence), 3 assertion failure.
  int exit_code() const;

  nlohmann::json payload() const;
  nlohmann::json document(const std::string& timestamp) const;

  /// Writes <dir>/<experiment>.json and one <experiment>_<table>.csv per table.
  void write(const std::string& dir, const std::string& timestamp) const;
  std::string csv(const std::string& table) const;

 private:
  std::string experiment_;
  nlohmann::json params_ = nlohmann::json::object();
  std::map<std::string, std::string> notes_;
  std::vector<Metric> metrics_;
  std::map<std::string, Table> tables_;
};

}  // namespace fockgauss
