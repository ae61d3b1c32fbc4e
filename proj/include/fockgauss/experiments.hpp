#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fockgauss/config.hpp"
#include "fockgauss/report.hpp"

namespace fockgauss {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunOptions {
  Config config;
  std::uint64_t seed = kDefaultSeed;
};

struct Experiment {
  std::string name;
  std::string anchor;   // the statement the experiment exercises
  std::string summary;  // one line
  std::function<void(const RunOptions&, Report&)> body;
};

/// The fixed catalog, in listing order.
const std::vector<Experiment>& experiment_catalog();

/// nullptr when unknown.
const Experiment* find_experiment(std::string_view name);

/// Runs one experiment. ResidualError becomes a failing residual metric and
/// PreconditionError a failing assertion; ConfigError and malformed symbols
/// propagate to the caller as usage errors.
Report run_experiment(const Experiment& e, const RunOptions& options);

}  // namespace fockgauss
