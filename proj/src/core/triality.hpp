// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "core/coherence.hpp"

namespace triad {

// Wave/particle/mixedness split of a state. Constructing a report checks the
// triality identity C + D + M = 1 (within 1e-12, components >= -1e-9) and
// folds the observed deviations into a process-wide tally, so a suite can
// assert at the end that the identity held for every state it ever touched.
struct TrialityReport {
  MeasureKind measure;
  double wave_C;
  double particle_D;
  double mixed_M;
  double sum;

  TrialityReport(MeasureKind m, double c, double d, double mm);
};

struct TrialityStats {
  std::uint64_t reports = 0;
  double max_sum_deviation = 0.0;  // max |C + D + M - 1| seen
  double min_component = 0.0;      // most negative component seen
};

TrialityStats triality_stats();
void reset_triality_stats();

TrialityReport triality(const DensityMatrix& rho, MeasureKind m);

struct Example1Row {
  double p, C, D, M;
};
struct Example2Row {
  double p, C, D, M, r;
};

// Two-path sweep rows at p = k/(steps-1) for the l1 measure. Each row is
// computed twice, from the closed-form expressions and end-to-end through
// interferometer_state + triality; the paths must agree within 1e-12.
std::vector<Example1Row> example1_sweep(double overlap, int steps);

// Same sweep for the relative-entropy measure, overlap entering through the
// Bloch radius r; closed form vs engine within 1e-9.
std::vector<Example2Row> example2_sweep(double overlap, int steps);

// (I_max - I_min)/(I_max + I_min) over analyzer phases phi_k = 2 pi k/steps,
// intensity I(phi) = (1 + 2 Re(e^{i phi} rho_01))/2.
double fringe_visibility(const DensityMatrix& rho, int phase_steps);

}  // namespace triad
