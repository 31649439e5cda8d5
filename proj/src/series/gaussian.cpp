#include "qweyl/series/gaussian.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

namespace qweyl::series {

GaussianWord reduce_word(const GaussianWord& w) {
  GaussianWord out;
  for (const auto& g : w) {
    if (!out.empty() && out.back().same_base(g) && out.back().power == -g.power) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

KeyedMonomial word_conjugate(const SeriesContext& ctx, KeyedMonomial x, const GaussianWord& w) {
  for (const auto& g : w) x = conjugate_monomial(ctx, x, g);
  return x;
}

namespace {

long phi(const SeriesContext& ctx, const GaussianWord& w, const std::vector<long>& n) {
  long v = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const long bjj = ctx.beta(w[j].letter, w[j].letter);
    v += w[j].d * n[j] * (n[j] + 1) / 2 + static_cast<long>(w[j].s) * n[j] + bjj * n[j] * (n[j] - 1) / 2;
    for (std::size_t i = 0; i < j; ++i) v += n[i] * n[j] * ctx.beta(w[i].letter, w[j].letter);
  }
  return v;
}

struct Enumerator {
  const SeriesContext& ctx;
  const GaussianWord& w;
  const std::vector<int>& e;
  int qmax;
  std::vector<long> lo, hi, n;
  std::map<int, Coeff>& out;

  void run(std::size_t j) {
    if (j == n.size()) {
      for (int i = 0; i < ctx.nc; ++i) {
        long s = 0;
        for (std::size_t t = 0; t < n.size(); ++t) s += n[t] * w[t].letter.e[i];
        if (s != e[i]) return;
      }
      long p = phi(ctx, w, n);
      if (p < qmax) out[static_cast<int>(p)] += 1;
      return;
    }
    for (long v = lo[j]; v <= hi[j]; ++v) {
      n[j] = v;
      run(j + 1);
    }
  }
};

}  // namespace

bool gaussian_word_coefficients(const SeriesContext& ctx, const GaussianWord& w, const std::vector<int>& e,
                                int qmax, std::map<int, Coeff>& out) {
  out.clear();
  const int k = static_cast<int>(w.size());
  for (const auto& g : w)
    if (g.power != 1) throw std::invalid_argument("coefficients need positive Gaussian sums");
  if (k == 0) {
    bool zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (zero && 0 < qmax) out[0] = 1;
    return true;
  }
  const int r = ctx.nc;
  Eigen::MatrixXd lam(r, k), a(k, k);
  Eigen::VectorXd b(k), target(r);
  for (int i = 0; i < r; ++i) {
    target(i) = e[i];
    for (int j = 0; j < k; ++j) lam(i, j) = w[j].letter.e[i];
  }
  for (int i = 0; i < k; ++i) {
    const double bii = static_cast<double>(ctx.beta(w[i].letter, w[i].letter));
    a(i, i) = w[i].d + bii;
    b(i) = w[i].d / 2.0 + w[i].s - bii / 2.0;
    for (int j = i + 1; j < k; ++j) a(i, j) = a(j, i) = static_cast<double>(ctx.beta(w[i].letter, w[j].letter));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(lam, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9) ++rank;
  Eigen::VectorXd n0 = svd.solve(target);
  if ((lam * n0 - target).norm() > 1e-6) return true;
  const int free = k - rank;
  Eigen::VectorXd nstar = n0;
  double lmin = 0;
  if (free > 0) {
    Eigen::MatrixXd null = svd.matrixV().rightCols(free);
    Eigen::MatrixXd h = null.transpose() * a * null;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    lmin = es.eigenvalues().minCoeff();
    if (lmin <= 1e-9) return false;
    Eigen::VectorXd y = -h.ldlt().solve(null.transpose() * (a * n0 + b));
    nstar = n0 + null * y;
  }
  const double phistar = 0.5 * nstar.dot(a * nstar) + b.dot(nstar);
  double radius = 0.5;
  if (free > 0) radius = std::sqrt(std::max(0.0, 2.0 * (qmax - phistar)) / lmin) + 1e-6;
  if (phistar >= qmax + 1e-9) return true;
  Enumerator en{ctx, w, e, qmax, {}, {}, std::vector<long>(k), out};
  for (int j = 0; j < k; ++j) {
    en.lo.push_back(static_cast<long>(std::ceil(nstar(j) - radius - 1e-9)));
    en.hi.push_back(static_cast<long>(std::floor(nstar(j) + radius + 1e-9)));
  }
  en.run(0);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return true;
}

GaussianComparison compare_gaussian_words(const SeriesContext& ctx, const GaussianWord& lhs,
                                          const GaussianWord& rhs, int qmax, int box) {
  GaussianComparison res;
  GaussianWord l = reduce_word(lhs), r = reduce_word(rhs);
  auto same = [](const GaussianWord& x, const GaussianWord& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].same_base(y[i]) || x[i].power != y[i].power) return false;
    return true;
  };
  if (same(l, r)) {
    res.method = l.empty() ? "empty" : "identical";
    return res;
  }
  res.method = "conjugation";
  for (int i = 0; i < ctx.nc; ++i) {
    std::vector<int> unit(ctx.n, 0);
    unit[i] = 1;
    KeyedMonomial x{0, Key::from(unit)};
    KeyedMonomial a = word_conjugate(ctx, x, l), b = word_conjugate(ctx, x, r);
    if (a == b) continue;
    res.equal = false;
    Discrepancy d;
    d.part = "gaussian action on " + ctx.sys->name(i);
    d.exps.resize(ctx.n);
    for (int t = 0; t < ctx.n; ++t) d.exps[t] = a.key.e[t] - b.key.e[t];
    d.qexp = static_cast<int>(a.qpow - b.qpow);
    res.discrepancies.push_back(d);
  }
  auto positive = [](const GaussianWord& x) {
    return std::all_of(x.begin(), x.end(), [](const Gaussian& g) { return g.power == 1; });
  };
  if (!positive(l) || !positive(r)) {
    res.notes.push_back("inverse Gaussian sums present; words compared by conjugation action");
    return res;
  }
  std::vector<int> e(ctx.n, 0);
  bool definite = true;
  std::function<void(int)> walk = [&](int i) {
    if (!definite) return;
    if (i == ctx.nc) {
      std::map<int, Coeff> cl, cr;
      if (!gaussian_word_coefficients(ctx, l, e, qmax, cl) || !gaussian_word_coefficients(ctx, r, e, qmax, cr)) {
        definite = false;
        return;
      }
      for (auto& [q, v] : cr) cl[q] -= v;
      for (const auto& [q, v] : cl) {
        if (v == 0) continue;
        res.equal = false;
        res.discrepancies.push_back({"gaussian coefficient", e, q, v});
      }
      return;
    }
    for (int v = -box; v <= box; ++v) {
      e[i] = v;
      walk(i + 1);
    }
    e[i] = 0;
  };
  walk(0);
  if (definite) {
    res.method = "conjugation+coefficients";
  } else {
    res.notes.push_back("Gaussian exponent form is only semidefinite on fibers; words compared by conjugation action");
  }
  return res;
}

}  // namespace qweyl::series
