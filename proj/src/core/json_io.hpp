// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "core/channels.hpp"
#include "core/qwalk.hpp"
#include "core/states.hpp"
#include "core/triality.hpp"

namespace triad {

// Density matrix: {"dim": d, "re": [[...]], "im": [[...]]}; "im" may be
// omitted for real matrices. Malformed input raises ValidationError citing
// the offending row/column.
DensityMatrix parse_density_json(const std::string& text);

// Interferometer: {"probs": [...], "gram_re": [[...]], "gram_im": [[...]]}.
InterferometerConfig parse_interferometer_json(const std::string& text);

// Auto-detect: an object with "probs" is an interferometer config (reduced to
// its state); one with "re" is a density matrix.
DensityMatrix parse_state_json(const std::string& text);

// Walk config: {"steps": T, "coin_re": [[...]], "coin_im": [[...]],
// "initial_position": x, "initial_coin_re": [...], "initial_coin_im": [...]}.
// Everything but "steps" falls back to the Hadamard-walk defaults.
WalkConfig parse_walk_config_json(const std::string& text);

std::string density_to_json(const DensityMatrix& rho);
std::string triality_to_json(const TrialityReport& rep);
std::string axiom_reports_to_json(const std::vector<AxiomReport>& reps);

}  // namespace triad
