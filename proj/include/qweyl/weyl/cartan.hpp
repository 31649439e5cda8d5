#pragma once

#include <string>
#include <vector>

namespace qweyl::weyl {

enum class Family { A, B2, G2, D5 };

// Generalized Cartan matrix with orientation data u for the classical action.
// Node indices follow the family's own numbering (A and D5 from 0, B2 and G2 from 1).
struct CartanData {
  std::string label;
  Family family = Family::A;
  int first = 0;
  std::vector<std::vector<int>> a;
  std::vector<std::vector<int>> u;

  int rank() const { return static_cast<int>(a.size()); }
  int aij(int i, int j) const { return a[i - first][j - first]; }
  int uij(int i, int j) const { return u[i - first][j - first]; }
  bool adjacent(int i, int j) const { return i != j && aij(i, j) != 0; }
};

CartanData cartan_A(int l);
CartanData cartan_B2();
CartanData cartan_G2();
CartanData cartan_D5();

// Empty when the invariants hold, otherwise the first violation.
std::string validate(const CartanData& c);

}  // namespace qweyl::weyl
