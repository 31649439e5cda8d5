#include "qweyl/oracle/fp_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qweyl::oracle {

FpMat FpMat::identity(int n, u32 p) { return scalar(n, 1, p); }

FpMat FpMat::scalar(int n, u32 c, u32 p) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return monomial(std::move(perm), std::vector<u32>(n, c % p), p);
}

FpMat FpMat::monomial(std::vector<int> perm, std::vector<u32> vals, u32 p) {
  FpMat m;
  m.n_ = static_cast<int>(perm.size());
  m.p_ = p;
  m.mono_ = true;
  m.perm_ = std::move(perm);
  m.vals_ = std::move(vals);
  return m;
}

FpMat FpMat::dense(int n, std::vector<u32> entries, u32 p) {
  if (entries.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("bad dense size");
  FpMat m;
  m.n_ = n;
  m.p_ = p;
  m.mono_ = false;
  m.d_ = std::move(entries);
  return m;
}

u32 FpMat::at(int row, int col) const {
  if (!mono_) return d_[static_cast<std::size_t>(row) * n_ + col];
  return perm_[col] == row ? vals_[col] : 0;
}

std::vector<u32> FpMat::to_dense() const {
  if (!mono_) return d_;
  std::vector<u32> d(static_cast<std::size_t>(n_) * n_, 0);
  for (int j = 0; j < n_; ++j) d[static_cast<std::size_t>(perm_[j]) * n_ + j] = vals_[j];
  return d;
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  const u64 p = p_;
  const int n = n_;
  if (mono_ && o.mono_) {
    std::vector<int> perm(n);
    std::vector<u32> vals(n);
    for (int j = 0; j < n; ++j) {
      int k = o.perm_[j];
      perm[j] = perm_[k];
      vals[j] = static_cast<u32>(static_cast<u64>(vals_[k]) * o.vals_[j] % p);
    }
    return monomial(std::move(perm), std::move(vals), p_);
  }
  std::vector<u32> r(static_cast<std::size_t>(n) * n, 0);
  if (mono_) {
    // row perm_[k] of result gets vals_[k] * row k of o
    for (int k = 0; k < n; ++k) {
      const u64 v = vals_[k];
      const u32* src = &o.d_[static_cast<std::size_t>(k) * n];
      u32* dst = &r[static_cast<std::size_t>(perm_[k]) * n];
      for (int j = 0; j < n; ++j) dst[j] = static_cast<u32>(v * src[j] % p);
    }
    return dense(n, std::move(r), p_);
  }
  if (o.mono_) {
    // column j of result = o.vals_[j] * column o.perm_[j] of this
    for (int j = 0; j < n; ++j) {
      const u64 v = o.vals_[j];
      const int k = o.perm_[j];
      for (int i = 0; i < n; ++i)
        r[static_cast<std::size_t>(i) * n + j] = static_cast<u32>(v * d_[static_cast<std::size_t>(i) * n + k] % p);
    }
    return dense(n, std::move(r), p_);
  }
  std::vector<u64> acc(n);
  for (int i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const u32* a = &d_[static_cast<std::size_t>(i) * n];
    for (int k = 0; k < n; ++k) {
      const u64 aik = a[k];
      if (!aik) continue;
      const u32* b = &o.d_[static_cast<std::size_t>(k) * n];
      for (int j = 0; j < n; ++j) acc[j] += aik * b[j];
    }
    u32* dst = &r[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < n; ++j) dst[j] = static_cast<u32>(acc[j] % p);
  }
  return dense(n, std::move(r), p_);
}

FpMat FpMat::operator+(const FpMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
  if (mono_ && o.mono_ && perm_ == o.perm_) {
    std::vector<u32> v(n_);
    for (int j = 0; j < n_; ++j) v[j] = static_cast<u32>((static_cast<u64>(vals_[j]) + o.vals_[j]) % p_);
    return monomial(perm_, std::move(v), p_);
  }
  std::vector<u32> a = to_dense();
  if (o.mono_) {
    for (int j = 0; j < n_; ++j) {
      u32& x = a[static_cast<std::size_t>(o.perm_[j]) * n_ + j];
      x = static_cast<u32>((static_cast<u64>(x) + o.vals_[j]) % p_);
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<u32>((static_cast<u64>(a[i]) + o.d_[i]) % p_);
  }
  return dense(n_, std::move(a), p_);
}

FpMat FpMat::scaled(u32 c) const {
  FpMat r = *this;
  auto& v = mono_ ? r.vals_ : r.d_;
  for (auto& x : v) x = static_cast<u32>(static_cast<u64>(x) * c % p_);
  return r;
}

FpMat FpMat::inverse() const {
  const u64 p = p_;
  const int n = n_;
  if (mono_) {
    std::vector<int> perm(n);
    std::vector<u32> vals(n);
    for (int j = 0; j < n; ++j) {
      if (vals_[j] == 0) throw SingularSample("singular matrix");
      perm[perm_[j]] = j;
      vals[perm_[j]] = static_cast<u32>(invmod(vals_[j], p));
    }
    return monomial(std::move(perm), std::move(vals), p_);
  }
  std::vector<u64> a(d_.begin(), d_.end());
  std::vector<u64> b(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i) * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[static_cast<std::size_t>(r) * n + col]) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularSample("singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<std::size_t>(piv) * n + j], a[static_cast<std::size_t>(col) * n + j]);
        std::swap(b[static_cast<std::size_t>(piv) * n + j], b[static_cast<std::size_t>(col) * n + j]);
      }
    u64 inv = invmod(a[static_cast<std::size_t>(col) * n + col], p);
    u64* ra = &a[static_cast<std::size_t>(col) * n];
    u64* rb = &b[static_cast<std::size_t>(col) * n];
    for (int j = 0; j < n; ++j) {
      ra[j] = ra[j] * inv % p;
      rb[j] = rb[j] * inv % p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      u64 f = a[static_cast<std::size_t>(r) * n + col];
      if (!f) continue;
      u64 g = p - f;
      u64* xa = &a[static_cast<std::size_t>(r) * n];
      u64* xb = &b[static_cast<std::size_t>(r) * n];
      for (int j = col; j < n; ++j) xa[j] = (xa[j] + g * ra[j]) % p;
      for (int j = 0; j < n; ++j) xb[j] = (xb[j] + g * rb[j]) % p;
    }
  }
  std::vector<u32> out(b.begin(), b.end());
  return dense(n, std::move(out), p_);
}

FpMat FpMat::power(long k) const {
  if (k < 0) return inverse().power(-k);
  FpMat r = identity(n_, p_);
  FpMat base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool FpMat::operator==(const FpMat& o) const {
  if (n_ != o.n_) return false;
  if (mono_ && o.mono_) {
    for (int j = 0; j < n_; ++j) {
      if (vals_[j] != o.vals_[j]) return false;
      if (vals_[j] != 0 && perm_[j] != o.perm_[j]) return false;
    }
    return true;
  }
  return first_difference(o).first < 0;
}

std::pair<int, int> FpMat::first_difference(const FpMat& o) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != o.at(i, j)) return {i, j};
  return {-1, -1};
}

bool FpMat::is_scalar(u32* value) const {
  u32 c = at(0, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? c : 0u)) return false;
  if (value) *value = c;
  return true;
}

}  // namespace qweyl::oracle
