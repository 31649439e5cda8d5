#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweyl/oracle/randomized_equal.hpp"

namespace qweyl::cli {

struct RunConfig {
  oracle::OracleConfig oracle;
  std::optional<int> qmax;
  std::optional<int> cmax;
  bool timing = false;
};

// "5,7,9" -> {5, 7, 9}; every order must be at least 2
std::vector<int> parse_orders(const std::string& text);

// key = value lines; '#' starts a comment. Keys: orders, trials, seed, retries, qmax, cmax, timing.
void apply_config_text(const std::string& text, RunConfig& cfg);
void apply_config_file(const std::string& path, RunConfig& cfg);

}  // namespace qweyl::cli
