#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qweyl {

using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generators g_0 < g_1 < ... < g_{n-1} with g_i g_j = q^{C_ij} g_j g_i,
// followed by central letters.  Monomials are ordered by this list.
class GeneratorSystem {
 public:
  GeneratorSystem(std::vector<std::string> noncommuting, std::vector<std::vector<int>> c,
                  std::vector<std::string> central);

  static std::shared_ptr<const GeneratorSystem> make(std::vector<std::string> noncommuting,
                                                     std::vector<std::vector<int>> c,
                                                     std::vector<std::string> central);

  int noncommuting_count() const { return static_cast<int>(nc_names_.size()); }
  int central_count() const { return static_cast<int>(central_names_.size()); }
  int size() const { return noncommuting_count() + central_count(); }

  const std::string& name(int i) const;
  std::optional<int> index(const std::string& name) const;
  int require(const std::string& name) const;
  bool is_central(int i) const { return i >= noncommuting_count(); }

  int c(int i, int j) const;
  const std::vector<std::vector<int>>& matrix() const { return c_; }

  // q-exponent picked up when g^x * g^y is written in normal order.
  long beta(const std::vector<int>& x, const std::vector<int>& y) const;
  // omega(x,y) with g^x g^y = q^{omega(x,y)} g^y g^x.
  long omega(const std::vector<int>& x, const std::vector<int>& y) const;

 private:
  std::vector<std::string> nc_names_;
  std::vector<std::string> central_names_;
  std::vector<std::vector<int>> c_;
};

using SystemPtr = std::shared_ptr<const GeneratorSystem>;

}  // namespace qweyl
