#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qweyl/cli/config.hpp"
#include "qweyl/weyl/relations.hpp"

namespace qweyl::cli {

constexpr int kReportVersion = 1;

enum ExitCode { kOk = 0, kUnequal = 1, kUsage = 2, kInconclusive = 3 };

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<weyl::RelationReport> relations;
  // series identities carry their own witnesses; indexed like relations
  std::vector<nlohmann::ordered_json> extra;
  long elapsed_ms = 0;
};

int exit_code(const SuiteReport& r);

nlohmann::ordered_json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace qweyl::cli
