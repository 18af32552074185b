// SPDX-License-Identifier: Apache-2.0
#include "core/triality.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace triad {

namespace {

std::atomic<std::uint64_t> g_reports{0};
std::atomic<double> g_max_dev{0.0};
std::atomic<double> g_min_comp{0.0};

void atomic_max(std::atomic<double>& target, double value) {
  double cur = target.load(std::memory_order_relaxed);
  while (value > cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

void atomic_min(std::atomic<double>& target, double value) {
  double cur = target.load(std::memory_order_relaxed);
  while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

TrialityReport::TrialityReport(MeasureKind m, double c, double d, double mm)
    : measure(m), wave_C(c), particle_D(d), mixed_M(mm), sum(c + d + mm) {
  const double dev = std::abs(sum - 1.0);
  const double low = std::min(c, std::min(d, mm));
  g_reports.fetch_add(1, std::memory_order_relaxed);
  atomic_max(g_max_dev, dev);
  atomic_min(g_min_comp, low);
  if (dev > 1e-12) {
    std::ostringstream msg;
    msg << "triality identity violated: C + D + M = " << sum;
    throw std::logic_error(msg.str());
  }
  if (low < -1e-9) {
    std::ostringstream msg;
    msg << "triality component fell below zero: " << low;
    throw std::logic_error(msg.str());
  }
}

TrialityStats triality_stats() {
  TrialityStats s;
  s.reports = g_reports.load();
  s.max_sum_deviation = g_max_dev.load();
  s.min_component = g_min_comp.load();
  return s;
}

void reset_triality_stats() {
  g_reports.store(0);
  g_max_dev.store(0.0);
  g_min_comp.store(0.0);
}

TrialityReport triality(const DensityMatrix& rho, MeasureKind m) {
  if (!is_normalized(m))
    throw ValidationError("triality requires a normalized measure");
  const double c = coherence(rho, m);
  const double lifted = coherence(diagonal_pure_state(rho).projector(), m);
  // C + (1 - lifted) + (lifted - c) telescopes to 1 up to a couple of ulp.
  return TrialityReport(m, c, 1.0 - lifted, lifted - c);
}

namespace {

void require_sweep_args(double overlap, int steps) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) {
    std::ostringstream msg;
    msg << "overlap " << overlap << " outside [0, 1]";
    throw ValidationError(msg.str());
  }
  if (steps < 2) throw ValidationError("sweep needs at least 2 steps");
}

void require_agreement(double formula, double engine, double tol, const char* label, double p) {
  if (std::abs(formula - engine) > tol) {
    std::ostringstream msg;
    msg << "sweep self-check failed for " << label << " at p = " << p << ": formula " << formula
        << " vs engine " << engine;
    throw std::logic_error(msg.str());
  }
}

}  // namespace

std::vector<Example1Row> example1_sweep(double overlap, int steps) {
  require_sweep_args(overlap, steps);
  std::vector<Example1Row> rows;
  rows.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double p = double(k) / (steps - 1);
    const double root = 2.0 * std::sqrt(p * (1.0 - p));
    const double c = root * overlap;
    const double d = 1.0 - root;
    const double m = root * (1.0 - overlap);

    const DensityMatrix rho = interferometer_state(InterferometerConfig::two_path(p, overlap));
    const TrialityReport rep = triality(rho, MeasureKind::L1Normalized);
    require_agreement(c, rep.wave_C, 1e-12, "C", p);
    require_agreement(d, rep.particle_D, 1e-12, "D", p);
    require_agreement(m, rep.mixed_M, 1e-12, "M", p);

    rows.push_back({p, rep.wave_C, rep.particle_D, rep.mixed_M});
  }
  return rows;
}

std::vector<Example2Row> example2_sweep(double overlap, int steps) {
  require_sweep_args(overlap, steps);
  std::vector<Example2Row> rows;
  rows.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double p = double(k) / (steps - 1);
    const double r =
        std::sqrt(4.0 * p * (1.0 - p) * overlap * overlap + (2.0 * p - 1.0) * (2.0 * p - 1.0));
    const double hp = binary_entropy(p);
    const double s_rho = binary_entropy(0.5 * (1.0 + r));  // eigenvalues (1 +- r)/2
    const double c = hp - s_rho;
    const double d = 1.0 - hp;
    const double m = s_rho;

    const DensityMatrix rho = interferometer_state(InterferometerConfig::two_path(p, overlap));
    const TrialityReport rep = triality(rho, MeasureKind::RelEntropyNormalized);
    require_agreement(c, rep.wave_C, 1e-9, "C", p);
    require_agreement(d, rep.particle_D, 1e-9, "D", p);
    require_agreement(m, rep.mixed_M, 1e-9, "M", p);

    rows.push_back({p, rep.wave_C, rep.particle_D, rep.mixed_M, r});
  }
  return rows;
}

double fringe_visibility(const DensityMatrix& rho, int phase_steps) {
  if (rho.dim() != 2) throw ValidationError("fringe visibility requires a qubit (d = 2)");
  if (phase_steps < 64) throw ValidationError("need at least 64 phase steps");
  double imax = 0.0, imin = 1.0;
  for (int k = 0; k < phase_steps; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / phase_steps;
    const cplx phase(std::cos(phi), std::sin(phi));
    const double intensity = 0.5 * (1.0 + 2.0 * (phase * rho(0, 1)).real());
    imax = std::max(imax, intensity);
    imin = std::min(imin, intensity);
  }
  imin = std::max(imin, 0.0);  // roundoff guard at extremal states
  return (imax + imin) > 0.0 ? (imax - imin) / (imax + imin) : 0.0;
}

}  // namespace triad
