#pragma once

#include <vector>

#include "qweyl/oracle/prime_field.hpp"

namespace qweyl::oracle {

// Square matrix over Z/p.  Kept in monomial form (one nonzero per column,
// column j nonzero at row perm[j]) as long as possible, dense otherwise.
class FpMat {
 public:
  FpMat() = default;

  static FpMat identity(int n, u32 p);
  static FpMat scalar(int n, u32 c, u32 p);
  static FpMat monomial(std::vector<int> perm, std::vector<u32> vals, u32 p);
  static FpMat dense(int n, std::vector<u32> entries, u32 p);

  int dim() const { return n_; }
  u32 prime() const { return p_; }
  bool is_monomial() const { return mono_; }
  u32 at(int row, int col) const;
  std::vector<u32> to_dense() const;
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<u32>& vals() const { return vals_; }

  FpMat operator*(const FpMat& o) const;
  FpMat operator+(const FpMat& o) const;
  FpMat scaled(u32 c) const;
  FpMat inverse() const;  // throws SingularSample
  FpMat power(long k) const;

  bool operator==(const FpMat& o) const;
  bool is_scalar(u32* value = nullptr) const;

  // first (row, col) where this and o differ, or (-1, -1)
  std::pair<int, int> first_difference(const FpMat& o) const;

 private:
  int n_ = 0;
  u32 p_ = 2;
  bool mono_ = true;
  std::vector<int> perm_;
  std::vector<u32> vals_;
  std::vector<u32> d_;
};

}  // namespace qweyl::oracle
