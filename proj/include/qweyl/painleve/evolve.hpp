#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweyl/oracle/representation.hpp"
#include "qweyl/painleve/flows.hpp"

namespace qweyl::painleve {

struct InvariantValue {
  std::string label;
  oracle::FpMat value;
  oracle::FpMat expected;
  bool ok = false;
};

struct TrajectoryStep {
  int step = 0;
  std::vector<oracle::FpMat> state;  // one matrix per generator, system order
  std::vector<InvariantValue> invariants;
};

struct Trajectory {
  std::string flow;
  int order = 0;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample_seed = 0;
  int resamples = 0;
  std::vector<std::string> labels;
  std::vector<TrajectoryStep> steps;

  bool conserved() const;
};

// Iterates the step map on a clock/shift representation of order N over Z/p:
// the state after n steps is the image of every generator under T^n.  A
// singular step restarts from a fresh sample, at most max_resamples times.
Trajectory evolve_numeric(const FlowSpec& flow, int steps, int order, std::uint64_t seed, int max_resamples = 8);

// One JSON object per step.
std::string to_json_lines(const Trajectory& t);

struct SymbolicStep {
  int step = 0;
  std::vector<std::pair<std::string, Expr>> images;
};

constexpr int kSymbolicCap = 4;

// Images of the noncommuting generators under T^n for n = 0..steps.
std::vector<SymbolicStep> evolve_symbolic(const FlowSpec& flow, int steps, int cap = kSymbolicCap);

}  // namespace qweyl::painleve
