// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "core/coherence.hpp"

namespace triad {

// Trace-preserving Kraus channel; completeness sum K_l^dagger K_l = I is
// enforced at construction within 1e-10.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops);

  static KrausChannel dephasing(int d);
  static KrausChannel unitary(ComplexMatrix u);
  static KrausChannel permutation(const std::vector<int>& perm);

  int dim() const { return ops_.empty() ? 0 : ops_[0].rows(); }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

 private:
  std::vector<ComplexMatrix> ops_;
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

struct Outcome {
  double probability;
  DensityMatrix state;
};

// Selective measurement readout: outcomes (p_l, K_l rho K_l^dagger / p_l)
// with p_l < 1e-12 pruned. Probabilities sum to 1 within 1e-10.
std::vector<Outcome> selective_apply(const KrausChannel& ch, const DensityMatrix& rho);

// Structural incoherence test: every Kraus operator has at most one entry of
// magnitude > tol per column, which makes the channel map diagonal states to
// diagonal states.
bool is_incoherent(const KrausChannel& ch, double tol);

// Random incoherent channel, deterministic per seed: each operator places at
// most one Gaussian entry per column (distinct rows within an operator, so
// each K_l^dagger K_l stays diagonal), every column keeps at least one entry
// across the set, and a joint column rescaling makes completeness exact.
KrausChannel random_incoherent_channel(int d, int n_kraus, std::uint64_t seed);

using MeasureFn = std::function<double(const DensityMatrix&)>;

// Randomized certification of the coherence-measure axioms. Margins follow
// the convention positive = violation, clamped at 0, maximized over trials.
struct AxiomReport {
  std::string measure_label;
  int dim = 0;
  int trials = 0;
  double worst_c1 = 0.0;   // C(dephased state), should vanish
  double worst_c2a = 0.0;  // C(Phi(rho)) - C(rho)
  double worst_c2b = 0.0;  // sum p_l C(rho_l) - C(rho)
  double worst_c3 = 0.0;   // C(mixture) - mixture of C
  std::uint64_t seed_c1 = 0, seed_c2a = 0, seed_c2b = 0, seed_c3 = 0;
};

AxiomReport check_axioms(MeasureKind m, int d, int trials, std::uint64_t seed);

// Same harness with an arbitrary measure plugged in (used to prove the
// harness can catch a broken measure, not just bless the good ones).
AxiomReport check_axioms_with(const std::string& label, const MeasureFn& fn, int d, int trials,
                              std::uint64_t seed);

}  // namespace triad
