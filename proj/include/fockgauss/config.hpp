#pragma once

// Flat key=value configuration. One entry per line, '#' starts a comment,
// blank lines are ignored, values may be double-quoted. Recognized keys:
// n, degree, order, quad_points, tolerance, seed, symbol. Unknown keys and
// malformed values raise ConfigError.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace fockgauss {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<std::size_t> n;
  std::optional<unsigned> degree;
  std::optional<unsigned> order;
  std::optional<std::size_t> quad_points;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> symbol;

  /// The entries as given, for echoing into reports.
  std::map<std::string, std::string> raw;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);

}  // namespace fockgauss
