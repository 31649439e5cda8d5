#include "qweyl/weyl/relations.hpp"

namespace qweyl::weyl {

Verdict aggregate(const std::vector<ProbeOutcome>& probes) {
  bool inconclusive = false;
  for (const auto& p : probes) {
    if (p.verdict == Verdict::Unequal) return Verdict::Unequal;
    if (p.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Equal;
}

RelationReport compare_all(std::string id, std::string description, std::string lhs, std::string rhs,
                           const std::vector<Comparison>& items, const OracleConfig& cfg, bool expect_equal) {
  RelationReport r{std::move(id), std::move(description), std::move(lhs), std::move(rhs), expect_equal, {}, {}};
  for (const auto& it : items) {
    oracle::OracleResult o = oracle::randomized_equal(it.lhs, it.rhs, cfg);
    ProbeOutcome p{it.probe, o.verdict, {}, o.note};
    if (o.verdict == Verdict::Unequal) p.witness = o.witness;
    r.probes.push_back(std::move(p));
  }
  r.verdict = aggregate(r.probes);
  return r;
}

RelationReport check_relation(const GroupWord& w1, const GroupWord& w2, const std::vector<Expr>& probes,
                              const OracleConfig& cfg, std::string id, bool expect_equal) {
  std::vector<Comparison> items;
  for (const auto& x : probes) items.push_back({to_string(x), apply_word(w1, x), apply_word(w2, x)});
  std::string desc = w1.label() + " = " + w2.label();
  return compare_all(std::move(id), desc, w1.label(), w2.label(), items, cfg, expect_equal);
}

RelationReport check_well_defined(const Endomorphism& phi, const OracleConfig& cfg, std::string id) {
  const GeneratorSystem& s = *phi.sys;
  std::vector<Comparison> items;
  for (int i = 0; i < s.noncommuting_count(); ++i)
    for (int j = i + 1; j < s.noncommuting_count(); ++j) {
      const Expr& x = phi.images[i];
      const Expr& y = phi.images[j];
      Expr qc = qpower(phi.sys, s.c(i, j));
      std::string label = s.name(i) + s.name(j) + " = q^" + std::to_string(s.c(i, j)) + " " + s.name(j) + s.name(i);
      if (phi.anti)
        items.push_back({label, y * x, qc * x * y});
      else
        items.push_back({label, x * y, qc * y * x});
    }
  for (int k = s.noncommuting_count(); k < s.size(); ++k)
    for (int i = 0; i < s.noncommuting_count(); ++i)
      items.push_back({s.name(k) + " central", phi.images[k] * phi.images[i], phi.images[i] * phi.images[k]});
  std::string desc = phi.name + (phi.anti ? " reverses" : " preserves") + " the defining relations";
  return compare_all(std::move(id), desc, phi.name, "relations", items, cfg);
}

namespace {

int braid_length(const CartanData& c, int i, int j) {
  switch (c.aij(i, j) * c.aij(j, i)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
  }
  throw std::logic_error("no finite braid length");
}

std::vector<std::string> alternating(int i, int j, int m) {
  std::vector<std::string> r;
  for (int k = 0; k < m; ++k) r.push_back("s" + std::to_string(k % 2 ? j : i));
  return r;
}

void coxeter(const ActionFamily& f, const OracleConfig& cfg, std::vector<RelationReport>& out) {
  const CartanData& c = f.cartan;
  const auto probes = f.probes();
  const int lo = c.first, hi = c.first + c.rank();
  for (int i = lo; i < hi; ++i) {
    std::string si = "s" + std::to_string(i);
    out.push_back(check_relation(make_word(f, {si, si}), GroupWord{}, probes, cfg, f.name + ":" + si + "^2"));
  }
  for (int i = lo; i < hi; ++i)
    for (int j = i + 1; j < hi; ++j) {
      int m = braid_length(c, i, j);
      std::string id = f.name + ":" + (m == 2 ? "commute" : "braid") + "(" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
      out.push_back(
          check_relation(make_word(f, alternating(i, j, m)), make_word(f, alternating(j, i, m)), probes, cfg, id));
    }
}

void well_defined(const ActionFamily& f, const std::vector<std::string>& letters, const OracleConfig& cfg,
                  std::vector<RelationReport>& out) {
  for (const auto& n : letters) out.push_back(check_well_defined(f.letter(n), cfg, f.name + ":well-defined(" + n + ")"));
}

void invariant(const ActionFamily& f, const std::string& alias, const std::vector<std::string>& letters,
               const OracleConfig& cfg, std::vector<RelationReport>& out) {
  const Expr& x = f.aliases.at(alias);
  std::vector<Comparison> items;
  for (const auto& n : letters) items.push_back({n, apply_word(make_word(f, {n}), x), x});
  out.push_back(compare_all(f.name + ":invariant(" + alias + ")", alias + " is fixed by every letter", "g(" + alias + ")",
                            alias, items, cfg));
}

std::vector<std::string> reflections(const CartanData& c) {
  std::vector<std::string> r;
  for (int i = c.first; i < c.first + c.rank(); ++i) r.push_back("s" + std::to_string(i));
  return r;
}

}  // namespace

std::vector<RelationReport> a_classical_suite(int l, OracleConfig cfg) {
  cfg.commutative = true;
  ActionFamily f = classical_a_family(l);
  std::vector<RelationReport> out;
  coxeter(f, cfg, out);
  auto letters = reflections(f.cartan);
  invariant(f, "p", letters, cfg, out);
  return out;
}

std::vector<RelationReport> a_quantum_suite(int l, const OracleConfig& cfg) {
  ActionFamily f = quantum_a_family(l);
  std::vector<RelationReport> out;
  auto letters = reflections(f.cartan);
  auto all = letters;
  all.push_back("w");
  well_defined(f, all, cfg, out);
  coxeter(f, cfg, out);
  const auto probes = f.probes();
  for (int i = 0; i <= l; ++i) {
    std::string si = "s" + std::to_string(i), sj = "s" + std::to_string((i + 1) % (l + 1));
    out.push_back(check_relation(make_word(f, {"w", si, "w^-1"}), make_word(f, {sj}), probes, cfg,
                                 f.name + ":rotate(" + si + ")"));
  }
  out.push_back(check_relation(power(make_word(f, {"w"}), l + 1), GroupWord{}, probes, cfg, f.name + ":w^" +
                                                                                               std::to_string(l + 1)));
  invariant(f, "p", all, cfg, out);
  invariant(f, "c", all, cfg, out);
  return out;
}

std::vector<RelationReport> rank2_suite(Family fam, const OracleConfig& cfg) {
  ActionFamily f = rank2_family(fam);
  std::vector<RelationReport> out;
  well_defined(f, {"s1", "s2"}, cfg, out);
  coxeter(f, cfg, out);
  return out;
}

std::vector<RelationReport> d5_coxeter_suite(const OracleConfig& cfg) {
  ActionFamily f = d5_family();
  std::vector<RelationReport> out;
  auto letters = reflections(f.cartan);
  well_defined(f, letters, cfg, out);
  coxeter(f, cfg, out);
  invariant(f, "p", letters, cfg, out);
  return out;
}

std::vector<RelationReport> d5_diagram_suite(const OracleConfig& cfg) {
  ActionFamily f = d5_family();
  std::vector<RelationReport> out;
  const std::vector<std::string> maps{"sigma01", "sigma45", "tau", "sigma"};
  well_defined(f, maps, cfg, out);
  const auto probes = f.probes();
  for (const auto& m : maps)
    out.push_back(check_relation(make_word(f, {m, m}), GroupWord{}, probes, cfg, f.name + ":" + m + "^2"));
  const std::vector<std::pair<std::string, std::vector<int>>> perms{
      {"sigma", {1, 0, 2, 3, 5, 4}},
      {"sigma01", {1, 0, 2, 3, 4, 5}},
      {"sigma45", {0, 1, 2, 3, 5, 4}},
      {"tau", {5, 4, 3, 2, 1, 0}},
  };
  for (const auto& [m, perm] : perms)
    for (int j = 0; j < 6; ++j) {
      std::string sj = "s" + std::to_string(j), sk = "s" + std::to_string(perm[j]);
      out.push_back(check_relation(make_word(f, {m, sj, m}), make_word(f, {sk}), probes, cfg,
                                   f.name + ":" + m + "-conjugates(" + sj + ")"));
    }
  invariant(f, "p", {"sigma"}, cfg, out);
  return out;
}

std::vector<RelationReport> translations_suite(int l, const OracleConfig& cfg) {
  ActionFamily f = quantum_a_family(l);
  std::vector<RelationReport> out;
  const auto probes = f.probes();
  for (int j = 1; j <= l; ++j)
    for (int k = j + 1; k <= l; ++k) {
      std::string tj = "t" + std::to_string(j), tk = "t" + std::to_string(k);
      out.push_back(check_relation(make_word(f, {tj, tk}), make_word(f, {tk, tj}), probes, cfg,
                                   f.name + ":" + tj + tk + "=" + tk + tj));
    }
  for (int j = 1; j <= l; ++j) {
    std::string tj = "t" + std::to_string(j);
    out.push_back(check_relation(make_word(f, {tj, tj + "^-1"}), GroupWord{}, probes, cfg,
                                 f.name + ":" + tj + " inverse"));
  }
  return out;
}

}  // namespace qweyl::weyl
