// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "core/states.hpp"

namespace triad {

// The raw tags are the paper-facing quantities; the normalized ones divide by
// (d-1) and log2 d respectively so that every valid state lands in [0, 1].
enum class MeasureKind { L1, L1Normalized, RelEntropy, RelEntropyNormalized };

bool is_normalized(MeasureKind m);
std::string measure_name(MeasureKind m);

// C_l1 or C_Re of rho. The relative-entropy value uses the closed form
// S(dephase(rho)) - S(rho); relent_bruteforce below checks that shortcut.
double coherence(const DensityMatrix& rho, MeasureKind m);

// Minimum of S(rho||sigma) over diagonal sigma: simplex grid of the given
// resolution plus one coordinate-descent refinement pass. Only d in {2, 3}
// (the grid grows combinatorially). Test oracle for the closed form.
struct BruteforceResult {
  double value = 0.0;
  std::vector<double> minimizer;  // diagonal of the best sigma
};
BruteforceResult relent_bruteforce_detail(const DensityMatrix& rho, int grid);
double relent_bruteforce(const DensityMatrix& rho, int grid);

// D = 1 - C(|rho><rho|) with |rho> the diagonal pure state; normalized
// measures only (raw measures would push D outside [0, 1]).
double particle(const DensityMatrix& rho, MeasureKind m);

// M = C(|rho><rho|) - C(rho); normalized measures only.
double mixedness(const DensityMatrix& rho, MeasureKind m);

}  // namespace triad
