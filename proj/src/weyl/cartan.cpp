#include "qweyl/weyl/cartan.hpp"

#include <stdexcept>

namespace qweyl::weyl {

namespace {

// u_ij = 1 and u_ji = -a_ji / a_ij along each edge i -> j
void orient(CartanData& c, int i, int j) {
  int ii = i - c.first, jj = j - c.first;
  c.u[ii][jj] = 1;
  c.u[jj][ii] = -c.a[jj][ii] / c.a[ii][jj];
  if (-c.u[jj][ii] * c.a[ii][jj] != c.a[jj][ii]) throw std::logic_error("orientation needs a_ij | a_ji");
}

CartanData blank(std::string label, Family f, int n, int first) {
  CartanData c;
  c.label = std::move(label);
  c.family = f;
  c.first = first;
  c.a.assign(n, std::vector<int>(n, 0));
  c.u.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c.a[i][i] = 2;
  return c;
}

}  // namespace

CartanData cartan_A(int l) {
  if (l < 2) throw std::invalid_argument("A_l^(1) tables need l >= 2");
  CartanData c = blank("A" + std::to_string(l) + "^(1)", Family::A, l + 1, 0);
  for (int i = 0; i <= l; ++i) {
    int j = (i + 1) % (l + 1);
    c.a[i][j] = c.a[j][i] = -1;
  }
  for (int i = 0; i <= l; ++i) orient(c, i, (i + 1) % (l + 1));
  return c;
}

CartanData cartan_B2() {
  CartanData c = blank("B2", Family::B2, 2, 1);
  c.a[0][1] = -1;
  c.a[1][0] = -2;
  orient(c, 1, 2);
  return c;
}

CartanData cartan_G2() {
  CartanData c = blank("G2", Family::G2, 2, 1);
  c.a[0][1] = -1;
  c.a[1][0] = -3;
  orient(c, 1, 2);
  return c;
}

CartanData cartan_D5() {
  CartanData c = blank("D5^(1)", Family::D5, 6, 0);
  for (auto [i, j] : {std::pair{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}) {
    c.a[i][j] = c.a[j][i] = -1;
    orient(c, i, j);
  }
  return c;
}

std::string validate(const CartanData& c) {
  const int n = c.rank();
  for (int i = 0; i < n; ++i) {
    if (c.a[i][i] != 2) return "diagonal entry " + std::to_string(i) + " is not 2";
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (c.u[i][i] != 0) return "u has a nonzero diagonal";
        continue;
      }
      if ((c.a[i][j] == 0) != (c.a[j][i] == 0)) return "a_ij and a_ji vanish separately";
      if (c.a[i][j] > 0) return "positive off-diagonal entry";
      if (c.a[i][j] == 0) {
        if (c.u[i][j] != 0) return "u_ij nonzero off the diagram";
        continue;
      }
      // u_ij : u_ji = -a_ij : a_ji
      if (static_cast<long>(c.u[i][j]) * c.a[j][i] != -static_cast<long>(c.u[j][i]) * c.a[i][j])
        return "u ratio violated at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  return {};
}

}  // namespace qweyl::weyl
