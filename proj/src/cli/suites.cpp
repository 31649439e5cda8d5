#include "qweyl/cli/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

#include "qweyl/painleve/flows.hpp"
#include "qweyl/painleve/limits.hpp"

namespace qweyl::cli {

using nlohmann::ordered_json;
using oracle::OracleConfig;
using weyl::RelationReport;

namespace {

struct Part {
  std::vector<RelationReport> relations;
  std::vector<ordered_json> extra;
};

using Runner = std::function<Part(const RunConfig&)>;

Part oracle_part(std::vector<RelationReport> rs) {
  Part p;
  p.extra.assign(rs.size(), nullptr);
  p.relations = std::move(rs);
  return p;
}

template <class F>
Runner relations(F f) {
  return [f](const RunConfig& c) { return oracle_part(f(c.oracle)); };
}

std::string base(int d) { return d == 1 ? "q" : "q^" + std::to_string(d); }

std::string factor_text(const series::SeriesFactor& f, const GeneratorSystem& sys) {
  using K = series::SeriesFactor::Kind;
  const std::string a = to_string(f.a, sys);
  const bool psi = f.kind == K::Psi || f.kind == K::PsiInverse;
  const std::string b = psi ? to_string(f.b, sys) : "";
  switch (f.kind) {
    case K::Psi:
      return "Psi_" + base(f.d) + "(" + a + ", " + b + ")";
    case K::PsiInverse:
      return "Psi_" + base(f.d) + "(" + a + ", " + b + ")^-1";
    case K::Pochhammer:
      return "(" + a + "; " + base(f.d) + ")";
    case K::PochhammerInverse:
      return "(" + a + "; " + base(f.d) + ")^-1";
    case K::Theta:
      return "theta(" + a + "; " + base(f.d) + ")";
    case K::ThetaInverse:
      return "theta(" + a + "; " + base(f.d) + ")^-1";
    case K::Monomial:
      return a;
    case K::OnePlus:
      return "(1 + " + a + ")";
    case K::OnePlusInverse:
      return "(1 + " + a + ")^-1";
  }
  return "?";
}

std::string product_text(const std::vector<series::SeriesFactor>& fs, const GeneratorSystem& sys) {
  if (fs.empty()) return "1";
  std::string s;
  for (const auto& f : fs) s += (s.empty() ? "" : " ") + factor_text(f, sys);
  return s;
}

Runner identities(std::vector<std::function<series::NamedIdentity(int, int)>> makers) {
  return [makers](const RunConfig& c) {
    Part p;
    for (const auto& make : makers) {
      series::NamedIdentity id = make(-1, -1);
      if (c.qmax || c.cmax) id = make(c.qmax.value_or(id.params.qmax), c.cmax.value_or(id.params.cmax));
      series::IdentityReport r = series::verify_identity(id.sys, id.lhs, id.rhs, id.params);
      ordered_json w;
      p.relations.push_back(identity_relation(id, r, w));
      p.extra.push_back(std::move(w));
    }
    return p;
  };
}

template <class F>
std::function<series::NamedIdentity(int, int)> named(F f) {
  return [f](int qmax, int cmax) { return qmax < 0 ? f() : f(qmax, cmax); };
}

std::vector<RelationReport> joined(std::initializer_list<std::vector<RelationReport>> parts) {
  std::vector<RelationReport> r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"a1-classical",
       relations([](const OracleConfig& c) { return joined({weyl::a_classical_suite(2, c), weyl::a_classical_suite(3, c)}); })},
      {"a-quantum", relations([](const OracleConfig& c) {
         return joined({weyl::a_quantum_suite(2, c), weyl::a_quantum_suite(3, c), weyl::a_quantum_suite(4, c)});
       })},
      {"b2", relations([](const OracleConfig& c) { return weyl::rank2_suite(weyl::Family::B2, c); })},
      {"g2", relations([](const OracleConfig& c) { return weyl::rank2_suite(weyl::Family::G2, c); })},
      {"d5-coxeter", relations(weyl::d5_coxeter_suite)},
      {"d5-diagram", relations(weyl::d5_diagram_suite)},
      {"translations",
       relations([](const OracleConfig& c) { return joined({weyl::translations_suite(2, c), weyl::translations_suite(3, c)}); })},
      {"qp3", relations(painleve::qp3_suite)},
      {"qp6", relations(painleve::qp6_suite)},
      {"qp6-zy", relations(painleve::qp6_zy_form_check)},
      {"qp6-symmetry", relations(painleve::qp6_symmetry_check)},
      {"dilog", identities({named([](auto... a) { return series::pentagon_identity(a...); }),
                            named([](auto... a) { return series::dilog_identity(a...); }),
                            named([](auto... a) { return series::pseudoconstant_identity(a...); }),
                            named([](auto... a) { return series::one_step_ratio_identity(a...); }),
                            named([](auto... a) { return series::pentagon_swapped_control(a...); }),
                            named([](auto... a) { return series::dilog_swapped_control(a...); }),
                            named([](auto... a) { return series::one_step_ratio_wrong_shift_control(a...); })})},
      {"series-b2", identities({named([](auto... a) { return series::b2_identity(a...); }),
                                named([](auto... a) { return series::b2_swapped_control(a...); })})},
      {"series-g2", identities({named([](auto... a) { return series::g2_identity(a...); })})},
      {"limits", relations([](const OracleConfig& c) {
         return joined({painleve::classical_limit_check(2, c), painleve::classical_limit_check(3, c)});
       })},
      {"controls", relations(painleve::falsification_controls)},
  };
  return r;
}

const Runner* find_runner(const std::string& name) {
  for (const auto& [n, run] : registry())
    if (n == name) return &run;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> r;
    for (const auto& [n, run] : registry()) r.push_back(n);
    r.push_back("all");
    return r;
  }();
  return names;
}

bool is_suite(const std::string& name) { return name == "all" || find_runner(name) != nullptr; }

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  auto start = std::chrono::steady_clock::now();
  std::vector<const Runner*> runners;
  if (name == "all")
    for (const auto& [n, run] : registry()) runners.push_back(&run);
  else
    runners.push_back(find_runner(name));
  std::vector<std::future<Part>> jobs;
  for (const Runner* r : runners) jobs.push_back(std::async(std::launch::async, *r, std::cref(cfg)));
  SuiteReport rep;
  rep.suite = name;
  rep.config = cfg;
  for (auto& j : jobs) {
    Part p = j.get();
    rep.relations.insert(rep.relations.end(), p.relations.begin(), p.relations.end());
    rep.extra.insert(rep.extra.end(), p.extra.begin(), p.extra.end());
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

long weight(const std::vector<int>& e) {
  long w = 0;
  for (int x : e) w += std::abs(x);
  return w;
}

std::string with_aliases(const Expr& e, const weyl::ActionFamily& f, PrintStyle style) {
  if (!e.is_monomial() || e.mono().is_zero()) return to_string(e, style);
  const GeneratorSystem& sys = *f.sys;
  Monomial rest = e.mono();
  std::vector<std::pair<std::string, int>> used;
  for (const auto& [name, alias] : f.aliases) {
    if (!alias.is_monomial()) continue;
    const Monomial& a = alias.mono();
    if (a.qpow != 0 || a.scalar != 1) continue;
    bool central = true;
    for (int i = 0; i < sys.noncommuting_count(); ++i) central = central && a.exps[i] == 0;
    if (!central) continue;
    int best = 0;
    long best_w = weight(rest.exps);
    for (int k = -6; k <= 6; ++k) {
      std::vector<int> r = rest.exps;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= k * a.exps[i];
      if (weight(r) + std::abs(k) < best_w) best = k, best_w = weight(r) + std::abs(k);
    }
    if (!best) continue;
    for (std::size_t i = 0; i < rest.exps.size(); ++i) rest.exps[i] -= best * a.exps[i];
    used.push_back({name, best});
  }
  if (used.empty()) return to_string(e, style);
  std::string s;
  for (const auto& [name, k] : used) s += (s.empty() ? "" : "*") + name + (k == 1 ? "" : "^" + std::to_string(k));
  std::string r = to_string(rest, sys);
  if (r == "1") return s;
  if (r == "-1") return "-" + s;
  return r.front() == '-' ? "-" + s + "*" + r.substr(1) : s + "*" + r;
}

}  // namespace

std::string act_text(const std::string& group, const std::string& word, const std::string& on, PrintStyle style) {
  weyl::ActionFamily f = weyl::family_by_name(group);
  weyl::GroupWord w = weyl::parse_word(f, word);
  Expr e = f.parse(on);
  return with_aliases(canonicalize_light(weyl::apply_word(w, e)), f, style);
}

RelationReport identity_relation(const series::NamedIdentity& id, const series::IdentityReport& r,
                                 ordered_json& witness) {
  RelationReport rel;
  rel.id = "series:" + id.id;
  rel.description = id.description;
  rel.lhs = product_text(id.lhs, *id.sys);
  rel.rhs = product_text(id.rhs, *id.sys);
  rel.expect_equal = id.expect_holds;
  weyl::ProbeOutcome probe;
  probe.probe = "coefficients q^<" + std::to_string(r.qmax) + ", central degree <= " + std::to_string(r.cmax);
  if (!r.complete)
    probe.verdict = oracle::Verdict::Inconclusive;
  else
    probe.verdict = r.holds ? oracle::Verdict::Equal : oracle::Verdict::Unequal;
  probe.note = r.gaussian_check;
  for (const auto& n : r.notes) probe.note += (probe.note.empty() ? "" : "; ") + n;
  witness = nullptr;
  if (!r.discrepancies.empty()) {
    const auto& d = r.discrepancies.front();
    witness["part"] = d.part;
    std::map<std::string, int> exps;
    for (std::size_t i = 0; i < d.exps.size() && i < static_cast<std::size_t>(id.sys->size()); ++i)
      if (d.exps[i]) exps[id.sys->name(static_cast<int>(i))] = d.exps[i];
    witness["exponents"] = exps;
    witness["qexp"] = d.qexp;
    witness["value"] = d.value;
    witness["count"] = r.discrepancy_count;
  }
  rel.probes.push_back(std::move(probe));
  rel.verdict = rel.probes.front().verdict;
  return rel;
}

}  // namespace qweyl::cli
