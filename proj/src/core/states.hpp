// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "core/matrix.hpp"
#include "core/numerics.hpp"

namespace triad {

// Validated d x d density matrix: Hermitian, unit trace, positive
// semidefinite (eigenvalues >= -1e-10; the [-1e-10, 0) band is clamped to 0
// and the trace renormalized, so roundoff from channel application is
// tolerated without accepting genuinely invalid states).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  int dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const cplx& operator()(int i, int j) const { return mat_(i, j); }

  double purity() const;  // Tr(rho^2)

 private:
  ComplexMatrix mat_;
};

class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes);

  int dim() const { return int(amps_.size()); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  DensityMatrix projector() const;

 private:
  std::vector<cplx> amps_;
};

// d-path interferometer: path probabilities plus the detector Gram matrix
// <eta_i|eta_j>. Only the Gram enters the reduced state, so detectors never
// need an explicit Hilbert space.
class InterferometerConfig {
 public:
  InterferometerConfig(std::vector<double> path_probs, ComplexMatrix detector_gram);

  // Two paths with probabilities (p, 1-p) and detector overlap <eta_1|eta_2>.
  static InterferometerConfig two_path(double p, cplx overlap);

  // Computes the Gram matrix from explicit (normalized) detector vectors.
  static InterferometerConfig from_detector_states(const std::vector<double>& path_probs,
                                                   const std::vector<std::vector<cplx>>& detectors);

  int paths() const { return int(probs_.size()); }
  const std::vector<double>& path_probs() const { return probs_; }
  const ComplexMatrix& detector_gram() const { return gram_; }

 private:
  std::vector<double> probs_;
  ComplexMatrix gram_;
};

struct BlochVector {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  double norm() const;
};

const ComplexMatrix& pauli(int k);  // k in {1, 2, 3}

// Reduced particle state after tracing out the detectors:
// entry (i,j) = sqrt(p_i p_j) <eta_j|eta_i>.
DensityMatrix interferometer_state(const InterferometerConfig& cfg);

// |rho> = sum_i sqrt(rho_ii) |i>, the pure state sharing rho's diagonal.
PureState diagonal_pure_state(const DensityMatrix& rho);

// Zeroes the off-diagonals, keeping the diagonal; idempotent.
DensityMatrix dephase(const DensityMatrix& rho);

DensityMatrix from_bloch(const BlochVector& b);
BlochVector to_bloch(const DensityMatrix& rho);

// rho = G G^dagger / Tr(G G^dagger), G a d x rank matrix of standard complex
// Gaussians from the seeded generator (see rng.hpp). Deterministic per seed.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);
PureState random_pure(int d, std::uint64_t seed);

}  // namespace triad
