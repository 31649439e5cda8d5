#include "qweyl/painleve/evolve.hpp"

#include "json.hpp"
#include <stdexcept>

namespace qweyl::painleve {

using oracle::FpMat;

bool Trajectory::conserved() const {
  for (const auto& s : steps)
    for (const auto& v : s.invariants)
      if (!v.ok) return false;
  return !steps.empty();
}

namespace {

oracle::Representation with_state(const oracle::Representation& base, const std::vector<FpMat>& state) {
  oracle::Representation r = base;
  for (std::size_t i = 0; i < state.size(); ++i) r.gens[i] = state[i];
  return r;
}

std::vector<FpMat> state_of(const oracle::Representation& rep) {
  std::vector<FpMat> s;
  for (const auto& g : rep.gens) s.push_back(*g);
  return s;
}

FpMat power_of(const FpMat& m, int n) { return n == 0 ? FpMat::identity(m.dim(), m.prime()) : m.power(n); }

bool run(const FlowSpec& flow, const Endomorphism& step, int steps, const oracle::Representation& rep0,
         Trajectory& out) {
  const auto& sys = flow.family.sys;
  std::vector<FpMat> q0, m0;
  for (const auto& c : flow.conserved) {
    q0.push_back(oracle::evaluate(c.quantity, rep0));
    m0.push_back(oracle::evaluate(c.multiplier, rep0));
  }
  oracle::Representation rep = rep0;
  out.steps.clear();
  try {
    for (int n = 0; n <= steps; ++n) {
      if (n > 0) {
        std::vector<FpMat> next;
        for (int i = 0; i < sys->size(); ++i) next.push_back(oracle::evaluate(step.images[i], rep));
        rep = with_state(rep0, next);
      }
      TrajectoryStep st;
      st.step = n;
      st.state = state_of(rep);
      for (std::size_t k = 0; k < flow.conserved.size(); ++k) {
        FpMat v = oracle::evaluate(flow.conserved[k].quantity, rep);
        FpMat want = power_of(m0[k], n) * q0[k];
        bool ok = v == want;
        st.invariants.push_back({flow.conserved[k].label, std::move(v), std::move(want), ok});
      }
      out.steps.push_back(std::move(st));
    }
  } catch (const oracle::SingularSample&) {
    return false;
  }
  return true;
}

nlohmann::json matrix_json(const FpMat& m) {
  std::uint32_t s = 0;
  if (m.is_scalar(&s)) return {{"scalar", s}};
  return {{"dim", m.dim()}, {"entries", m.to_dense()}};
}

}  // namespace

Trajectory evolve_numeric(const FlowSpec& flow, int steps, int order, std::uint64_t seed, int max_resamples) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  const auto& sys = flow.family.sys;
  Endomorphism step = weyl::word_endomorphism(flow.word, sys);
  if (step.anti) throw std::invalid_argument("the step map must be an automorphism");
  Trajectory t;
  t.flow = flow.name;
  t.order = order;
  t.seed = seed;
  for (int i = 0; i < sys->size(); ++i) t.labels.push_back(sys->name(i));
  oracle::PrimeField field = oracle::field_for_order(order);
  t.prime = field.p;
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    std::uint64_t s = oracle::derive_seed(seed, {static_cast<std::uint64_t>(attempt)});
    oracle::Representation rep = oracle::build_representation(sys, field, s);
    t.sample_seed = s;
    t.resamples = attempt;
    if (run(flow, step, steps, rep, t)) return t;
  }
  throw std::runtime_error("every sample hit a singular step; try another seed");
}

std::string to_json_lines(const Trajectory& t) {
  std::string out;
  for (const auto& s : t.steps) {
    nlohmann::ordered_json j;
    j["flow"] = t.flow;
    j["step"] = s.step;
    j["order"] = t.order;
    j["prime"] = t.prime;
    nlohmann::ordered_json state;
    for (std::size_t i = 0; i < s.state.size(); ++i) state[t.labels[i]] = matrix_json(s.state[i]);
    j["state"] = state;
    nlohmann::ordered_json inv;
    for (const auto& v : s.invariants)
      inv[v.label] = {{"value", matrix_json(v.value)}, {"expected", matrix_json(v.expected)}, {"ok", v.ok}};
    j["invariants"] = inv;
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<SymbolicStep> evolve_symbolic(const FlowSpec& flow, int steps, int cap) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (steps > cap)
    throw std::invalid_argument("symbolic evolution is capped at " + std::to_string(cap) +
                                " steps; use numeric mode for longer runs");
  const auto& sys = flow.family.sys;
  Endomorphism step = weyl::word_endomorphism(flow.word, sys);
  Endomorphism acc = Endomorphism::identity(sys);
  std::vector<SymbolicStep> out;
  for (int n = 0; n <= steps; ++n) {
    if (n > 0) acc = compose(acc, step);
    SymbolicStep s;
    s.step = n;
    for (int i = 0; i < sys->noncommuting_count(); ++i) s.images.push_back({sys->name(i), canonicalize_light(acc.images[i])});
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qweyl::painleve
