#include "fockgauss/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fockgauss {

const char* to_string(MetricKind k) noexcept {
  switch (k) {
    case MetricKind::Assertion: return "assertion";
    case MetricKind::Residual: return "residual";
    case MetricKind::Info: return "info";
  }
  return "?";
}

namespace {

// NaN and infinities have no JSON literal; keep them readable.
nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

Report::Report(std::string experiment) : experiment_(std::move(experiment)) {}

bool Report::assert_true(const std::string& name, bool ok, nlohmann::json value, const std::string& convention) {
  metrics_.push_back({name, MetricKind::Assertion, std::move(value), std::nullopt, ok, convention});
  return ok;
}

bool Report::assert_le(const std::string& name, double value, double tolerance, const std::string& convention) {
  const bool ok = value <= tolerance;
  metrics_.push_back({name, MetricKind::Assertion, number(value), tolerance, ok, convention});
  return ok;
}

bool Report::assert_ge(const std::string& name, double value, double floor, const std::string& convention) {
  const bool ok = value >= floor;
  metrics_.push_back({name, MetricKind::Assertion, number(value), floor, ok, convention});
  return ok;
}

bool Report::residual(const std::string& name, double value, double tolerance) {
  const bool ok = value <= tolerance;
  metrics_.push_back({name, MetricKind::Residual, number(value), tolerance, ok, {}});
  return ok;
}

void Report::info(const std::string& name, nlohmann::json value, const std::string& convention) {
  if (value.is_number_float()) value = number(value.get<double>());
  metrics_.push_back({name, MetricKind::Info, std::move(value), std::nullopt, true, convention});
}

bool Report::assertions_pass() const {
  for (const auto& m : metrics_) {
    if (m.kind == MetricKind::Assertion && !m.pass) return false;
  }
  return true;
}

bool Report::residuals_pass() const {
  for (const auto& m : metrics_) {
    if (m.kind == MetricKind::Residual && !m.pass) return false;
  }
  return true;
}

int Report::exit_code() const {
  if (!residuals_pass()) return 4;
  if (!assertions_pass()) return 3;
  return 0;
}

nlohmann::json Report::payload() const {
  nlohmann::json metrics = nlohmann::json::array();
  nlohmann::json residuals = nlohmann::json::object();
  for (const auto& m : metrics_) {
    nlohmann::json e = {{"name", m.name}, {"kind", to_string(m.kind)}, {"value", m.value}, {"pass", m.pass}};
    e["tolerance"] = m.tolerance ? nlohmann::json(*m.tolerance) : nlohmann::json(nullptr);
    if (!m.convention.empty()) e["convention"] = m.convention;
    metrics.push_back(std::move(e));
    if (m.kind == MetricKind::Residual) residuals[m.name] = {{"value", m.value}, {"tolerance", *m.tolerance}, {"pass", m.pass}};
  }
  nlohmann::json doc;
  doc["experiment"] = experiment_;
  doc["params"] = params_;
  doc["convention_notes"] = notes_;
  doc["metrics"] = std::move(metrics);
  doc["residuals"] = std::move(residuals);
  doc["pass"] = pass();
  return doc;
}

nlohmann::json Report::document(const std::string& timestamp) const {
  nlohmann::json doc = payload();
  doc["header"] = {{"schema_version", kReportSchemaVersion}, {"timestamp", timestamp}};
  return doc;
}

std::string Report::csv(const std::string& name) const {
  const auto it = tables_.find(name);
  if (it == tables_.end()) throw std::out_of_range("no table " + name);
  std::ostringstream out;
  out << std::setprecision(17);
  for (std::size_t i = 0; i < it->second.columns.size(); ++i) out << (i ? "," : "") << it->second.columns[i];
  out << '\n';
  for (const auto& row : it->second.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

void Report::write(const std::string& dir, const std::string& timestamp) const {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  {
    std::ofstream out(base / (experiment_ + ".json"));
    if (!out) throw std::runtime_error("cannot write report into " + dir);
    out << document(timestamp).dump(2) << '\n';
  }
  for (const auto& [name, t] : tables_) {
    std::ofstream out(base / (experiment_ + "_" + name + ".csv"));
    if (!out) throw std::runtime_error("cannot write table into " + dir);
    out << csv(name);
  }
}

}  // namespace fockgauss
