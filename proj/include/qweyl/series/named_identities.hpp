#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qweyl/series/identity.hpp"

namespace qweyl::series {

struct NamedIdentity {
  std::string id;
  std::string description;
  SystemPtr sys;
  std::vector<SeriesFactor> lhs;
  std::vector<SeriesFactor> rhs;
  IdentityParams params;
  bool expect_holds = true;
};

// scalar * q^qpow * prod name^power, in normal order
Monomial make_monomial(const GeneratorSystem& sys, const std::vector<std::pair<std::string, int>>& letters,
                       long qpow = 0, long scalar = 1);

NamedIdentity pentagon_identity(int qmax = 8, int cmax = 8);
NamedIdentity dilog_identity(int qmax = 8, int cmax = 8);
NamedIdentity pseudoconstant_identity(int qmax = 6, int cmax = 6);
NamedIdentity one_step_ratio_identity(int qmax = 8, int cmax = 4);
NamedIdentity b2_identity(int qmax = 4, int cmax = 4);
NamedIdentity g2_identity(int qmax = 4, int cmax = 4);

NamedIdentity pentagon_swapped_control(int qmax = 8, int cmax = 8);
NamedIdentity dilog_swapped_control(int qmax = 6, int cmax = 6);
NamedIdentity b2_swapped_control(int qmax = 4, int cmax = 4);
NamedIdentity one_step_ratio_wrong_shift_control(int qmax = 8, int cmax = 4);

// the identities checked by the series suite, controls last
std::vector<NamedIdentity> series_identities();

}  // namespace qweyl::series
