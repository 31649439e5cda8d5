#include "qweyl/cli/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qweyl::cli {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long r = 0;
  try {
    r = std::stol(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw std::invalid_argument("config key '" + key + "' expects an integer");
  return r;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw std::invalid_argument("config key '" + key + "' expects a boolean");
}

}  // namespace

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    long n = to_long("orders", item);
    if (n < 2 || n > 64) throw std::invalid_argument("root order " + item + " outside [2, 64]");
    r.push_back(static_cast<int>(n));
  }
  if (r.empty()) throw std::invalid_argument("empty order list");
  return r;
}

void apply_config_text(const std::string& text, RunConfig& cfg) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "orders")
      cfg.oracle.orders = parse_orders(value);
    else if (key == "trials")
      cfg.oracle.trials = static_cast<int>(to_long(key, value));
    else if (key == "seed")
      cfg.oracle.seed = static_cast<std::uint64_t>(to_long(key, value));
    else if (key == "retries")
      cfg.oracle.retries = static_cast<int>(to_long(key, value));
    else if (key == "qmax")
      cfg.qmax = static_cast<int>(to_long(key, value));
    else if (key == "cmax")
      cfg.cmax = static_cast<int>(to_long(key, value));
    else if (key == "timing")
      cfg.timing = to_bool(key, value);
    else
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (cfg.oracle.trials < 1) throw std::invalid_argument("trials must be positive");
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(ss.str(), cfg);
}

}  // namespace qweyl::cli
