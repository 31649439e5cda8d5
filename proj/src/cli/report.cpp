#include "qweyl/cli/report.hpp"

#include <sstream>

namespace qweyl::cli {

using nlohmann::ordered_json;
using oracle::Verdict;

int exit_code(const SuiteReport& r) {
  bool inconclusive = false;
  for (const auto& rel : r.relations) {
    if (rel.passed()) continue;
    if (rel.verdict != Verdict::Inconclusive) return kUnequal;
    inconclusive = true;
  }
  return inconclusive ? kInconclusive : kOk;
}

namespace {

ordered_json witness_json(const oracle::Witness& w) {
  ordered_json j;
  j["order"] = w.order;
  j["prime"] = w.prime;
  j["seed"] = w.seed;
  j["trial"] = w.trial;
  if (w.row >= 0) {
    j["row"] = w.row;
    j["col"] = w.col;
  }
  return j;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["orders"] = c.oracle.orders;
  j["trials"] = c.oracle.trials;
  j["seed"] = c.oracle.seed;
  j["retries"] = c.oracle.retries;
  j["qmax"] = c.qmax ? ordered_json(*c.qmax) : ordered_json(nullptr);
  j["cmax"] = c.cmax ? ordered_json(*c.cmax) : ordered_json(nullptr);
  return j;
}

}  // namespace

ordered_json to_json(const SuiteReport& r) {
  ordered_json j;
  j["version"] = kReportVersion;
  j["suite"] = r.suite;
  j["config"] = config_json(r.config);
  ordered_json rels = ordered_json::array();
  for (std::size_t i = 0; i < r.relations.size(); ++i) {
    const auto& rel = r.relations[i];
    ordered_json x;
    x["id"] = rel.id;
    x["description"] = rel.description;
    x["lhs"] = rel.lhs;
    x["rhs"] = rel.rhs;
    x["expect"] = rel.expect_equal ? "equal" : "unequal";
    x["verdict"] = oracle::to_string(rel.verdict);
    x["passed"] = rel.passed();
    ordered_json probes = ordered_json::array();
    for (const auto& p : rel.probes) {
      ordered_json y;
      y["probe"] = p.probe;
      y["verdict"] = oracle::to_string(p.verdict);
      if (p.witness)
        y["witness"] = witness_json(*p.witness);
      else if (i < r.extra.size() && !r.extra[i].is_null())
        y["witness"] = r.extra[i];
      else
        y["witness"] = nullptr;
      if (!p.note.empty()) y["note"] = p.note;
      probes.push_back(std::move(y));
    }
    x["probes"] = std::move(probes);
    rels.push_back(std::move(x));
  }
  j["relations"] = std::move(rels);
  j["elapsed_ms"] = r.config.timing ? r.elapsed_ms : 0;
  return j;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& rel : r.relations) {
    passed += rel.passed();
    os << (rel.passed() ? "PASS " : "FAIL ") << rel.id << "  [" << oracle::to_string(rel.verdict);
    if (!rel.expect_equal) os << ", expected unequal";
    os << "]\n";
    if (rel.passed() && rel.expect_equal) continue;
    for (const auto& p : rel.probes) {
      if (p.verdict == Verdict::Equal) continue;
      os << "    " << p.probe << ": " << oracle::to_string(p.verdict);
      if (p.witness)
        os << " at order " << p.witness->order << ", prime " << p.witness->prime << ", seed " << p.witness->seed;
      if (!p.note.empty()) os << " (" << p.note << ")";
      os << '\n';
    }
  }
  os << r.suite << ": " << passed << "/" << r.relations.size() << " relations as expected";
  if (r.config.timing) os << ", " << r.elapsed_ms << " ms";
  os << '\n';
  return os.str();
}

}  // namespace qweyl::cli
