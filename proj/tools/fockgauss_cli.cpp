// fockgauss: run and list the verification experiments.
//   fockgauss list
//   fockgauss run <experiment> [--config PATH] [--out DIR] [--seed U64] [--json] [--csv]
// Exit codes: 0 pass, 2 usage, 3 assertion failure, 4 numerical residual failure.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fockgauss/config.hpp"
#include "fockgauss/experiments.hpp"
#include "fockgauss/kernels.hpp"

namespace {

constexpr int kUsage = 2;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_summary(const fockgauss::Report& r) {
  for (const auto& m : r.metrics()) {
    const char* status = m.kind == fockgauss::MetricKind::Info ? "INFO" : (m.pass ? "PASS" : "FAIL");
    std::string value = m.value.dump();
    if (value.size() > 100) value = value.substr(0, 97) + "...";
    std::cout << status << "  " << m.name << " = " << value;
    if (m.tolerance) std::cout << "  (tolerance " << *m.tolerance << ")";
    std::cout << '\n';
  }
  std::cout << r.experiment() << ": " << (r.pass() ? "pass" : "FAIL") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite/Fock operator calculus experiments"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the experiment catalog");
  auto* run = app.add_subcommand("run", "Run one experiment and write its report");
  std::string name, config_path, out_dir = "reports";
  std::uint64_t seed = 0;
  bool json_out = false, csv_out = false;
  run->add_option("experiment", name, "Experiment name (see list)")->required();
  run->add_option("--config", config_path, "key=value config file");
  run->add_option("--out", out_dir, "Report directory")->capture_default_str();
  auto* seed_opt = run->add_option("--seed", seed, "RNG seed (overrides the config)");
  run->add_flag("--json", json_out, "Print the JSON report to stdout");
  run->add_flag("--csv", csv_out, "Also write CSV tables next to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (list->parsed()) {
    for (const auto& e : fockgauss::experiment_catalog()) {
      std::cout << e.name << " — " << e.anchor << "  (" << e.summary << ")\n";
    }
    return 0;
  }

  const fockgauss::Experiment* experiment = fockgauss::find_experiment(name);
  if (!experiment) {
    std::cerr << "unknown experiment '" << name << "'; see 'fockgauss list'\n";
    return kUsage;
  }
  fockgauss::RunOptions options;
  try {
    if (!config_path.empty()) options.config = fockgauss::load_config(config_path);
    options.seed = *seed_opt ? seed : options.config.seed.value_or(fockgauss::kDefaultSeed);
    fockgauss::Report report = fockgauss::run_experiment(*experiment, options);
    report.param("isa", fockgauss::kernels::isa_name(fockgauss::kernels::active_isa()));
    const std::string stamp = utc_timestamp();
    if (!csv_out) {
      fockgauss::Report trimmed = report;
      trimmed.clear_tables();
      trimmed.write(out_dir, stamp);
    } else {
      report.write(out_dir, stamp);
    }
    if (json_out) std::cout << report.document(stamp).dump(2) << '\n';
    else print_summary(report);
    return report.exit_code();
  } catch (const fockgauss::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  }
}
