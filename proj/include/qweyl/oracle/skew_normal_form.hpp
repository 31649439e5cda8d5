#pragma once

#include <vector>

namespace qweyl::oracle {

using IntMatrix = std::vector<std::vector<long long>>;

// E unimodular with E^T M E = C, where M is block diagonal with blocks
// [[0, d_k], [-d_k, 0]] (d_k > 0) followed by a zero block of size kernel_dim.
struct SkewNormalForm {
  IntMatrix e;
  IntMatrix m;
  std::vector<long long> blocks;
  int kernel_dim = 0;
};

SkewNormalForm skew_normal_form(const IntMatrix& c);

IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
long long determinant(const IntMatrix& a);  // exact (Bareiss)

}  // namespace qweyl::oracle
