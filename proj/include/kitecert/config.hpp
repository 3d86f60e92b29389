#pragma once

// Run configuration: defaults, a key=value config file, and flag overrides.
// Precedence is flags > file > defaults; every value is validated and unknown
// keys are rejected loudly rather than ignored.

#include "kitecert/certify.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kitecert {

struct RunConfig {
  unsigned pi_bits = 96;     // width target (bits) for the pi^2 enclosure
  int max_depth = 12;        // bisection depth cap of the certifier
  unsigned denom_bits = 192; // denominator cap (bits) for sqrt enclosures
  int fem_level_lo = 5;      // coarse refinement level of the FEM oracle
  int fem_level_hi = 6;      // fine refinement level of the FEM oracle
  int grid = 40;             // scan grid density per axis
  std::string out_dir = "out";

  CertifyOptions certify_options() const {
    return {pi_bits, denom_bits, max_depth};
  }
};

namespace detail {

inline int parse_positive_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': '" + value +
                                "' is not an integer");
  }
  if (used != value.size())
    throw std::invalid_argument("config key '" + key + "': '" + value +
                                "' is not an integer");
  if (v <= 0)
    throw std::invalid_argument("config key '" + key + "' must be positive, got '" +
                                value + "'");
  return v;
}

}  // namespace detail

// Applies one key=value setting; used for both config-file lines and flags.
inline void set_option(RunConfig& cfg, const std::string& key,
                       const std::string& value) {
  if (key == "pi_bits") {
    cfg.pi_bits = static_cast<unsigned>(detail::parse_positive_int(key, value));
  } else if (key == "max_depth") {
    cfg.max_depth = detail::parse_positive_int(key, value);
  } else if (key == "denom_bits") {
    cfg.denom_bits = static_cast<unsigned>(detail::parse_positive_int(key, value));
  } else if (key == "fem_levels") {
    const std::size_t comma = value.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument(
          "config key 'fem_levels' expects two levels, e.g. 5,6");
    const int lo = detail::parse_positive_int(key, value.substr(0, comma));
    const int hi = detail::parse_positive_int(key, value.substr(comma + 1));
    if (lo >= hi)
      throw std::invalid_argument("config key 'fem_levels': levels must increase");
    cfg.fem_level_lo = lo;
    cfg.fem_level_hi = hi;
  } else if (key == "grid") {
    cfg.grid = detail::parse_positive_int(key, value);
  } else if (key == "out_dir") {
    if (value.empty())
      throw std::invalid_argument("config key 'out_dir' must not be empty");
    cfg.out_dir = value;
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

// Plain key=value text: one setting per line, '#' starts a comment, blank
// lines ignored, whitespace around key and value trimmed.
inline void apply_config_text(RunConfig& cfg, std::istream& in,
                              const std::string& origin) {
  std::string line;
  int lineno = 0;
  const auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    try {
      set_option(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
}

inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  apply_config_text(cfg, in, path);
}

}  // namespace kitecert
