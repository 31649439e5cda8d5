#pragma once

#include <string>
#include <vector>

#include "qweyl/series/comm_series.hpp"
#include "qweyl/series/gaussian.hpp"

namespace qweyl::series {

// Recipe for one factor of a product identity; built at a working precision.
struct SeriesFactor {
  enum class Kind {
    Psi,
    PsiInverse,
    Pochhammer,
    PochhammerInverse,
    Theta,
    ThetaInverse,
    Monomial,
    OnePlus,
    OnePlusInverse
  };
  Kind kind = Kind::Monomial;
  qweyl::Monomial a;  // z for Psi, x for Pochhammer/Theta, m otherwise
  qweyl::Monomial b;  // M for Psi
  int d = 1;
  std::string label;
};

SeriesFactor psi_factor(const Monomial& z, const Monomial& m, int d = 1, std::string label = {});
SeriesFactor psi_inverse_factor(const Monomial& z, const Monomial& m, int d = 1, std::string label = {});
SeriesFactor pochhammer_factor(const Monomial& x, int d = 1, std::string label = {});
SeriesFactor pochhammer_inverse_factor(const Monomial& x, int d = 1, std::string label = {});
SeriesFactor theta_factor(const Monomial& x, int d = 1, std::string label = {});
SeriesFactor theta_inverse_factor(const Monomial& x, int d = 1, std::string label = {});
SeriesFactor monomial_factor(const Monomial& m, std::string label = {});
SeriesFactor one_plus_factor(const Monomial& m, std::string label = {});
SeriesFactor one_plus_inverse_factor(const Monomial& m, std::string label = {});

enum class Engine { Graded, Commutative };
std::string to_string(Engine e);

struct IdentityParams {
  int qmax = 8;
  int cmax = 8;
  int max_precision = 512;
  int gaussian_box = 3;
  Engine engine = Engine::Graded;
};

struct IdentityReport {
  bool holds = false;
  bool complete = false;  // requested precision reached
  Engine engine = Engine::Graded;
  int qmax = 0;
  int cmax = 0;
  int working_precision = 0;
  std::size_t discrepancy_count = 0;
  std::vector<Discrepancy> discrepancies;  // first few only
  std::string gaussian_check;
  std::vector<std::string> notes;
};

// Multiplies both factor lists in order and compares all coefficients with
// q-exponent below qmax (and central degree at most cmax in the graded engine).
IdentityReport verify_identity(const SystemPtr& sys, const std::vector<SeriesFactor>& lhs,
                               const std::vector<SeriesFactor>& rhs, const IdentityParams& params);

// Commutative expansions truncated below q^qmax.
CommSeries qpochhammer(const ContextPtr& ctx, const Monomial& x, int d, int qmax);
CommSeries theta(const ContextPtr& ctx, const Monomial& x, int d, int qmax);
CommSeries psi(const ContextPtr& ctx, const Monomial& z, const Monomial& m, int d, int qmax);

// Graded expansion of a factor product, projected to (qmax, cmax); the Gaussian
// parts of Psi and Theta factors must cancel.
GradedSeries graded_product(const ContextPtr& ctx, const std::vector<SeriesFactor>& factors, int qmax, int cmax,
                            int max_precision = 512);

}  // namespace qweyl::series
