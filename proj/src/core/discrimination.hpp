// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "core/coherence.hpp"

namespace triad {

// One (prior, overlap) evaluation of the two-path duality relations. Both
// detector states are pure; eq17_lhs is NaN at p in {0, 1} where the path
// entropy vanishes.
struct DiscriminationReport {
  double prior_p = 0.0;
  double overlap = 0.0;
  double p_success = 0.0;  // Helstrom optimum
  double acc_bits = 0.0;   // accessible information
  double eq16_lhs = 0.0;
  double eq17_lhs = 0.0;
  double shannon_h = 0.0;  // H({p, 1-p})
};

// Optimal discrimination of {p: |eta1>, 1-p: |eta2>} with |<eta1|eta2>| =
// overlap, evaluated as (1 + trace_norm(p E1 - (1-p) E2))/2 on an explicit
// 2x2 realization. The closed form (1 + sqrt(1 - 4p(1-p) overlap^2))/2 is
// kept to the tests as an independent oracle.
double helstrom_success(double p, double overlap);

// Max mutual information over two-outcome projective measurements in the
// detector span, by coarse scan plus golden-section refinement over the
// analyzer angle; a certified lower bound that is tight for two pure states.
double accessible_info(double p, double overlap, double search_tol);

// lhs of the coherence/discrimination tradeoff: (2 sqrt(p(1-p)) overlap)^2 +
// (2 P_s - 1)^2; saturates at 1 for pure detector states.
double bagan_l1(double p, double overlap);

// lhs of the entropic tradeoff: (C_Re(rho) + Acc)/H2(p); requires p in (0,1).
double bagan_relent(double p, double overlap);

DiscriminationReport bagan_report(double p, double overlap);

// n x n grid over p, overlap in [0, 1].
std::vector<DiscriminationReport> bagan_grid(int n);

}  // namespace triad
