// SPDX-License-Identifier: Apache-2.0
#include "core/qwalk.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace triad {

WalkConfig::WalkConfig(int steps, ComplexMatrix coin, int initial_position, PureState initial_coin)
    : steps(steps),
      coin(std::move(coin)),
      initial_position(initial_position),
      initial_coin(std::move(initial_coin)) {
  if (steps < 0) throw ValidationError("step count must be nonnegative");
  if (!this->coin.square() || this->coin.rows() != 2)
    throw ValidationError("coin must be a 2x2 matrix");
  ComplexMatrix defect = this->coin.dagger() * this->coin - ComplexMatrix::identity(2);
  if (defect.max_abs() > kHermitianTol) {
    std::ostringstream msg;
    msg << "coin is not unitary: max |C^dag C - I| = " << defect.max_abs();
    throw ValidationError(msg.str());
  }
  if (this->initial_coin.dim() != 2) throw ValidationError("initial coin must have dimension 2");
}

WalkConfig WalkConfig::hadamard_default(int steps) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h = ComplexMatrix::from_rows({{s, s}, {s, -s}});
  PureState coin({cplx(s, 0.0), cplx(0.0, s)});
  return WalkConfig(steps, std::move(h), 0, std::move(coin));
}

WalkState::WalkState(int offset, std::vector<std::array<cplx, 2>> amplitudes)
    : offset_(offset), amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw ValidationError("walk state needs at least one site");
  double norm2 = 0.0;
  for (const auto& ab : amps_) norm2 += std::norm(ab[0]) + std::norm(ab[1]);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "walk state squared norm is " << norm2 << ", expected 1";
    throw ValidationError(msg.str());
  }
}

WalkState WalkState::product(int position, const PureState& coin) {
  if (coin.dim() != 2) throw ValidationError("coin must have dimension 2");
  return WalkState(position, {{coin.amplitudes()[0], coin.amplitudes()[1]}});
}

WalkState step(const WalkState& s, const ComplexMatrix& coin) {
  const int n = s.sites();
  std::vector<std::array<cplx, 2>> next(std::size_t(n) + 2, {cplx(0.0), cplx(0.0)});
  // Site x lands at index (x - (offset - 1)) = old index + 1 in the grown array.
  for (int i = 0; i < n; ++i) {
    const auto& ab = s.amp(i);
    const cplx a = coin(0, 0) * ab[0] + coin(0, 1) * ab[1];
    const cplx b = coin(1, 0) * ab[0] + coin(1, 1) * ab[1];
    next[std::size_t(i) + 2][0] += a;  // R moves to x + 1
    next[std::size_t(i)][1] += b;      // L moves to x - 1
  }
  return WalkState(s.offset() - 1, std::move(next));
}

std::vector<WalkState> evolve(const WalkConfig& cfg) {
  std::vector<WalkState> traj;
  traj.reserve(std::size_t(cfg.steps) + 1);
  traj.push_back(WalkState::product(cfg.initial_position, cfg.initial_coin));
  for (int t = 0; t < cfg.steps; ++t) traj.push_back(step(traj.back(), cfg.coin));
  return traj;
}

DensityMatrix coin_reduced(const WalkState& s) {
  cplx r00 = 0.0, r01 = 0.0, r11 = 0.0;
  for (int i = 0; i < s.sites(); ++i) {
    const auto& ab = s.amp(i);
    r00 += ab[0] * std::conj(ab[0]);
    r01 += ab[0] * std::conj(ab[1]);
    r11 += ab[1] * std::conj(ab[1]);
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = r00;
  m(0, 1) = r01;
  m(1, 0) = std::conj(r01);
  m(1, 1) = r11;
  return DensityMatrix(m);
}

double PositionDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) m += (offset + double(i)) * probs[i];
  return m;
}

double PositionDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double x = offset + double(i) - m;
    v += x * x * probs[i];
  }
  return v;
}

PositionDistribution position_distribution(const WalkState& s) {
  PositionDistribution dist;
  dist.offset = s.offset();
  dist.probs.resize(std::size_t(s.sites()));
  for (int i = 0; i < s.sites(); ++i) {
    const auto& ab = s.amp(i);
    dist.probs[std::size_t(i)] = std::norm(ab[0]) + std::norm(ab[1]);
  }
  return dist;
}

double position_l1_coherence(const WalkState& s) {
  const int n = s.sites();
  if (n < 2) return 0.0;
  // Position marginal rho_xy = a_x conj(a_y) + b_x conj(b_y); sum |rho_xy|
  // over x != y without materializing the matrix.
  double sum = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const auto& u = s.amp(x);
      const auto& v = s.amp(y);
      sum += 2.0 * std::abs(u[0] * std::conj(v[0]) + u[1] * std::conj(v[1]));
    }
  return sum / double(n - 1);
}

std::vector<WalkRow> walk_triality_trace(const WalkConfig& cfg, MeasureKind m) {
  if (!is_normalized(m)) throw ValidationError("walk trace requires a normalized measure");
  const std::vector<WalkState> traj = evolve(cfg);
  std::vector<WalkRow> rows;
  rows.reserve(traj.size());
  for (std::size_t t = 0; t < traj.size(); ++t) {
    const WalkState& s = traj[t];
    const TrialityReport rep = triality(coin_reduced(s), m);
    const PositionDistribution dist = position_distribution(s);
    rows.push_back({int(t), rep.wave_C, rep.particle_D, rep.mixed_M, position_l1_coherence(s),
                    dist.mean(), dist.variance()});
  }
  return rows;
}

}  // namespace triad
