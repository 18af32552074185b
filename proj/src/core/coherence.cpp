// SPDX-License-Identifier: Apache-2.0
#include "core/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace triad {

bool is_normalized(MeasureKind m) {
  return m == MeasureKind::L1Normalized || m == MeasureKind::RelEntropyNormalized;
}

std::string measure_name(MeasureKind m) {
  switch (m) {
    case MeasureKind::L1: return "l1-raw";
    case MeasureKind::L1Normalized: return "l1";
    case MeasureKind::RelEntropy: return "relent-raw";
    case MeasureKind::RelEntropyNormalized: return "relent";
  }
  throw std::logic_error("unknown measure tag");
}

double coherence(const DensityMatrix& rho, MeasureKind m) {
  const int d = rho.dim();
  if (d == 1 && is_normalized(m))
    throw ValidationError("normalized coherence is undefined for d = 1");

  double value = 0.0;
  switch (m) {
    case MeasureKind::L1:
    case MeasureKind::L1Normalized: {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) value += std::abs(rho(i, j));
      if (m == MeasureKind::L1Normalized) value /= double(d - 1);
      break;
    }
    case MeasureKind::RelEntropy:
    case MeasureKind::RelEntropyNormalized: {
      std::vector<double> diag(d);
      for (int i = 0; i < d; ++i) diag[i] = rho(i, i).real();
      value = shannon_entropy(diag) - von_neumann_entropy(rho.matrix());
      if (m == MeasureKind::RelEntropyNormalized) value /= std::log2(double(d));
      break;
    }
  }
  if (value < -1e-12) throw std::logic_error("coherence came out negative beyond roundoff");
  return std::max(value, 0.0);
}

BruteforceResult relent_bruteforce_detail(const DensityMatrix& rho, int grid) {
  const int d = rho.dim();
  if (d != 2 && d != 3) {
    std::ostringstream msg;
    msg << "brute-force minimization supports d = 2 or 3, got d = " << d;
    throw ValidationError(msg.str());
  }
  if (grid < 10) throw ValidationError("grid resolution must be at least 10");

  // Over diagonal sigma, S(rho||sigma) = -S(rho) - sum_i rho_ii log2 sigma_i.
  const double srho = von_neumann_entropy(rho.matrix());
  std::vector<double> diag(d);
  for (int i = 0; i < d; ++i) diag[i] = std::max(rho(i, i).real(), 0.0);

  const auto objective = [&](const std::vector<double>& sigma) -> double {
    double cross = 0.0;
    for (int i = 0; i < d; ++i) {
      if (sigma[i] < 1e-12) {
        if (diag[i] > 1e-10) return std::numeric_limits<double>::infinity();
        continue;
      }
      cross -= diag[i] * std::log2(sigma[i]);
    }
    return cross - srho;
  };

  BruteforceResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<double> sigma(d);
  if (d == 2) {
    for (int k = 0; k <= grid; ++k) {
      sigma[0] = double(k) / grid;
      sigma[1] = 1.0 - sigma[0];
      const double v = objective(sigma);
      if (v < best.value) {
        best.value = v;
        best.minimizer = sigma;
      }
    }
  } else {
    for (int a = 0; a <= grid; ++a)
      for (int b = 0; b <= grid - a; ++b) {
        sigma[0] = double(a) / grid;
        sigma[1] = double(b) / grid;
        sigma[2] = 1.0 - sigma[0] - sigma[1];
        const double v = objective(sigma);
        if (v < best.value) {
          best.value = v;
          best.minimizer = sigma;
        }
      }
  }

  // One coordinate-descent pass: redistribute mass within each coordinate
  // pair by a 1-D golden-section search (the objective is convex in sigma).
  sigma = best.minimizer;
  for (int i = 0; i < d - 1; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double s = sigma[i] + sigma[j];
      if (s <= 0.0) continue;
      const double x = golden_section_minimize(
          [&](double xi) {
            std::vector<double> cand = sigma;
            cand[i] = xi;
            cand[j] = s - xi;
            return objective(cand);
          },
          0.0, s, 1e-12);
      sigma[i] = x;
      sigma[j] = s - x;
    }
  const double refined = objective(sigma);
  if (refined < best.value) {
    best.value = refined;
    best.minimizer = sigma;
  }
  return best;
}

double relent_bruteforce(const DensityMatrix& rho, int grid) {
  return relent_bruteforce_detail(rho, grid).value;
}

namespace {

void require_normalized(MeasureKind m, const char* what) {
  if (!is_normalized(m)) {
    std::ostringstream msg;
    msg << what << " requires a normalized measure (got " << measure_name(m) << ")";
    throw ValidationError(msg.str());
  }
}

}  // namespace

double particle(const DensityMatrix& rho, MeasureKind m) {
  require_normalized(m, "particle quantifier");
  const double lifted = coherence(diagonal_pure_state(rho).projector(), m);
  return std::clamp(1.0 - lifted, 0.0, 1.0);
}

double mixedness(const DensityMatrix& rho, MeasureKind m) {
  require_normalized(m, "mixedness quantifier");
  return coherence(diagonal_pure_state(rho).projector(), m) - coherence(rho, m);
}

}  // namespace triad
