#include "fockgauss/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fockgauss {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v, int line) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("line " + std::to_string(line) + ": bad value for " + key + ": '" + v + "'");
  }
  return out;
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(number) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    else if (value.find('"') != std::string::npos) throw ConfigError("line " + std::to_string(number) + ": unbalanced quote");
    if (key.empty() || value.empty()) throw ConfigError("line " + std::to_string(number) + ": empty key or value");
    if (cfg.raw.count(key)) throw ConfigError("line " + std::to_string(number) + ": duplicate key " + key);

    if (key == "n") cfg.n = parse_number<std::size_t>(key, value, number);
    else if (key == "degree") cfg.degree = parse_number<unsigned>(key, value, number);
    else if (key == "order") cfg.order = parse_number<unsigned>(key, value, number);
    else if (key == "quad_points") cfg.quad_points = parse_number<std::size_t>(key, value, number);
    else if (key == "tolerance") {
      const double t = parse_number<double>(key, value, number);
      if (!(t > 0.0)) throw ConfigError("line " + std::to_string(number) + ": tolerance must be positive");
      cfg.tolerance = t;
    } else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value, number);
    else if (key == "symbol") cfg.symbol = value;
    else throw ConfigError("line " + std::to_string(number) + ": unknown key " + key);
    cfg.raw.emplace(key, value);
  }
  if (cfg.n && (*cfg.n == 0 || *cfg.n > 4)) throw ConfigError("n must be in 1..4");
  if (cfg.quad_points && *cfg.quad_points == 0) throw ConfigError("quad_points must be positive");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace fockgauss
