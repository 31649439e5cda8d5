#include "qweyl/system.hpp"

#include <set>

namespace qweyl {

GeneratorSystem::GeneratorSystem(std::vector<std::string> noncommuting,
                                 std::vector<std::vector<int>> c,
                                 std::vector<std::string> central)
    : nc_names_(std::move(noncommuting)), central_names_(std::move(central)), c_(std::move(c)) {
  const std::size_t n = nc_names_.size();
  if (c_.size() != n) throw AlgebraError("commutation matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].size() != n) throw AlgebraError("commutation matrix has wrong size");
    for (std::size_t j = 0; j < n; ++j)
      if (c_[i][j] != -c_[j][i]) throw AlgebraError("commutation matrix is not antisymmetric");
  }
  std::set<std::string> seen;
  for (const auto* names : {&nc_names_, &central_names_})
    for (const auto& s : *names) {
      if (s.empty() || s == "q") throw AlgebraError("invalid generator name '" + s + "'");
      if (!seen.insert(s).second) throw AlgebraError("duplicate generator name '" + s + "'");
    }
}

SystemPtr GeneratorSystem::make(std::vector<std::string> noncommuting,
                                std::vector<std::vector<int>> c,
                                std::vector<std::string> central) {
  return std::make_shared<const GeneratorSystem>(std::move(noncommuting), std::move(c),
                                                 std::move(central));
}

const std::string& GeneratorSystem::name(int i) const {
  if (i < noncommuting_count()) return nc_names_.at(i);
  return central_names_.at(i - noncommuting_count());
}

std::optional<int> GeneratorSystem::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (this->name(i) == name) return i;
  return std::nullopt;
}

int GeneratorSystem::require(const std::string& name) const {
  auto i = index(name);
  if (!i) throw AlgebraError("unknown generator '" + name + "'");
  return *i;
}

int GeneratorSystem::c(int i, int j) const {
  if (i >= noncommuting_count() || j >= noncommuting_count()) return 0;
  return c_[i][j];
}

long GeneratorSystem::beta(const std::vector<int>& x, const std::vector<int>& y) const {
  const int n = noncommuting_count();
  long s = 0;
  for (int i = 1; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < i; ++j) s += static_cast<long>(x[i]) * y[j] * c_[i][j];
  }
  return s;
}

long GeneratorSystem::omega(const std::vector<int>& x, const std::vector<int>& y) const {
  const int n = noncommuting_count();
  long s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += static_cast<long>(x[i]) * y[j] * c_[i][j];
  return s;
}

}  // namespace qweyl
