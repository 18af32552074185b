// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "core/triality.hpp"

namespace triad {

// Coined walk on the integer line. Position amplitudes (a_x, b_x) pair with
// the coin basis (|R>, |L>); a step applies the coin and then shifts the
// R-component right and the L-component left.
struct WalkConfig {
  int steps;
  ComplexMatrix coin;  // 2x2 unitary
  int initial_position;
  PureState initial_coin;

  WalkConfig(int steps, ComplexMatrix coin, int initial_position, PureState initial_coin);

  // Hadamard coin, walker at the origin, symmetric coin (|R> + i|L>)/sqrt(2).
  static WalkConfig hadamard_default(int steps);
};

class WalkState {
 public:
  // amplitudes[i] = (a_x, b_x) at lattice site x = offset + i.
  WalkState(int offset, std::vector<std::array<cplx, 2>> amplitudes);

  static WalkState product(int position, const PureState& coin);

  int sites() const { return int(amps_.size()); }
  int offset() const { return offset_; }
  int position_of(int index) const { return offset_ + index; }
  const std::array<cplx, 2>& amp(int index) const { return amps_[std::size_t(index)]; }

 private:
  int offset_;
  std::vector<std::array<cplx, 2>> amps_;
};

WalkState step(const WalkState& s, const ComplexMatrix& coin);

// Trajectory for t = 0..steps (steps + 1 entries).
std::vector<WalkState> evolve(const WalkConfig& cfg);

// Partial trace over position: 2x2 coin state.
DensityMatrix coin_reduced(const WalkState& s);

struct PositionDistribution {
  int offset = 0;
  std::vector<double> probs;  // probs[i] at position offset + i
  double mean() const;
  double variance() const;
};

PositionDistribution position_distribution(const WalkState& s);

// Normalized l1 coherence of the position marginal over the current support
// (sites - 1 in the denominator); 0 by convention on a single site.
double position_l1_coherence(const WalkState& s);

struct WalkRow {
  int t;
  double C_coin, D_coin, M_coin;
  double C_pos_l1;
  double mean_x, var_x;
};

std::vector<WalkRow> walk_triality_trace(const WalkConfig& cfg, MeasureKind m);

}  // namespace triad
