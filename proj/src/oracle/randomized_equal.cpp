#include "qweyl/oracle/randomized_equal.hpp"

namespace qweyl::oracle {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal:
      return "equal";
    case Verdict::Unequal:
      return "unequal";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

OracleResult randomized_equal(const Expr& lhs, const Expr& rhs, const OracleConfig& cfg) {
  if (lhs.system_ptr().get() != rhs.system_ptr().get())
    throw std::invalid_argument("compared expressions use different systems");
  OracleResult res;
  if (structurally_equal(canonicalize_light(lhs), canonicalize_light(rhs))) {
    res.verdict = Verdict::Equal;
    res.syntactic = true;
    return res;
  }
  const SystemPtr& sys = lhs.system_ptr();
  std::vector<bool> supp = support(lhs);
  auto s2 = support(rhs);
  for (std::size_t i = 0; i < supp.size(); ++i) supp[i] = supp[i] || s2[i];

  std::vector<int> orders = cfg.commutative ? std::vector<int>{1} : cfg.orders;
  std::vector<int> starved;
  for (int order : orders) {
    PrimeField field = field_for_order(order, cfg.prime_floor);
    for (int t = 0; t < cfg.trials; ++t) {
      bool done = false;
      for (int attempt = 0; attempt <= cfg.retries && !done; ++attempt) {
        std::uint64_t s = derive_seed(cfg.seed, {static_cast<std::uint64_t>(order),
                                                 static_cast<std::uint64_t>(t),
                                                 static_cast<std::uint64_t>(attempt)});
        Representation rep = cfg.commutative ? commutative_sample(sys, field, s)
                                             : build_representation(sys, field, s, &supp);
        try {
          FpMat a = evaluate(lhs, rep);
          FpMat b = evaluate(rhs, rep);
          ++res.samples;
          done = true;
          auto diff = a.first_difference(b);
          if (diff.first >= 0) {
            res.verdict = Verdict::Unequal;
            res.witness = {order, field.p, s, t, diff.first, diff.second};
            return res;
          }
        } catch (const SingularSample&) {
          ++res.singular_samples;
        }
      }
      if (!done) {
        starved.push_back(order);
        break;
      }
    }
  }
  if (!starved.empty()) {
    res.verdict = Verdict::Inconclusive;
    res.note = "every sample was singular for order " + std::to_string(starved.front());
    return res;
  }
  res.verdict = Verdict::Equal;
  return res;
}

}  // namespace qweyl::oracle
