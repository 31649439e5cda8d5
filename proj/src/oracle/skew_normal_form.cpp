#include "qweyl/oracle/skew_normal_form.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qweyl::oracle {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Reducer {
  IntMatrix m, e;
  int n;

  void swap(int i, int j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    for (auto& row : m) std::swap(row[i], row[j]);
    std::swap(e[i], e[j]);
  }

  // new basis vector i = b_i + k b_j
  void add(int i, int j, long long k) {
    if (k == 0) return;
    for (int r = 0; r < n; ++r) m[r][i] += k * m[r][j];
    for (int c = 0; c < n; ++c) m[i][c] += k * m[j][c];
    for (int c = 0; c < n; ++c) e[j][c] -= k * e[i][c];
  }
};

}  // namespace

SkewNormalForm skew_normal_form(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < n; ++j)
      if (c[i][j] != -c[j][i]) throw std::invalid_argument("matrix is not antisymmetric");
  }
  Reducer r{c, IntMatrix(n, std::vector<long long>(n, 0)), n};
  for (int i = 0; i < n; ++i) r.e[i][i] = 1;

  SkewNormalForm out;
  int s = 0;
  while (s + 1 < n) {
    int bi = -1, bj = -1;
    long long best = 0;
    for (int i = s; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        long long v = std::llabs(r.m[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    r.swap(s, bi);
    if (bj == s) bj = bi;
    r.swap(s + 1, bj);
    if (r.m[s][s + 1] < 0) r.swap(s, s + 1);
    const long long d = r.m[s][s + 1];
    bool clean = true;
    for (int k = s + 2; k < n; ++k) {
      r.add(k, s + 1, -floor_div(r.m[s][k], d));
      r.add(k, s, floor_div(r.m[s + 1][k], d));
      if (r.m[s][k] != 0 || r.m[s + 1][k] != 0) clean = false;
    }
    if (clean) {
      out.blocks.push_back(d);
      s += 2;
    }
  }
  out.kernel_dim = n - 2 * static_cast<int>(out.blocks.size());
  out.e = std::move(r.e);
  out.m = std::move(r.m);
  if (multiply(multiply(transpose(out.e), out.m), out.e) != c)
    throw std::logic_error("skew normal form failed to reproduce the input");
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<long long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  IntMatrix r(a.size(), std::vector<long long>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

long long determinant(const IntMatrix& a0) {
  const int n = static_cast<int>(a0.size());
  if (n == 0) return 1;
  IntMatrix a = a0;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace qweyl::oracle
