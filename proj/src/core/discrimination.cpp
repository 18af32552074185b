// SPDX-License-Identifier: Apache-2.0
#include "core/discrimination.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace triad {

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << what << " = " << x << " outside [0, 1]";
    throw ValidationError(msg.str());
  }
}

// Detector realization: eta1 = (1, 0), eta2 = (overlap, sqrt(1 - overlap^2)).
double eta2_second(double overlap) { return std::sqrt(std::max(0.0, 1.0 - overlap * overlap)); }

// Mutual information H(M, D) of the analyzer {P(theta), I - P(theta)}.
double mutual_info(double p, double overlap, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double a1 = c;                                    // <v|eta1>
  const double a2 = c * overlap + s * eta2_second(overlap);  // <v|eta2>
  const double m1 = std::min(a1 * a1, 1.0);
  const double m2 = std::min(a2 * a2, 1.0);
  const double joint[4] = {p * m1, (1.0 - p) * m2, p * (1.0 - m1), (1.0 - p) * (1.0 - m2)};
  const double q1 = joint[0] + joint[1];
  const auto h = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  const double h_prior = h(p) + h(1.0 - p);
  const double h_outcome = h(q1) + h(1.0 - q1);
  double h_joint = 0.0;
  for (double x : joint) h_joint += h(x);
  return h_prior + h_outcome - h_joint;
}

}  // namespace

double helstrom_success(double p, double overlap) {
  require_unit_interval(p, "prior");
  require_unit_interval(overlap, "overlap");
  const double b = eta2_second(overlap);
  const std::vector<cplx> eta1 = {1.0, 0.0};
  const std::vector<cplx> eta2 = {overlap, b};
  ComplexMatrix gap = outer(eta1, eta1);
  gap *= cplx(p);
  ComplexMatrix second = outer(eta2, eta2);
  second *= cplx(1.0 - p);
  gap -= second;
  return 0.5 * (1.0 + trace_norm(gap));
}

double accessible_info(double p, double overlap, double search_tol) {
  require_unit_interval(p, "prior");
  require_unit_interval(overlap, "overlap");
  if (!(search_tol > 0.0 && search_tol <= 1e-8))
    throw ValidationError("search tolerance must lie in (0, 1e-8]");

  // Relabeling the two outcomes maps theta to theta + pi/2, so the objective
  // has period pi/2; the coarse scan still covers [0, pi) for margin.
  constexpr int kScan = 512;
  const double step = std::numbers::pi / kScan;
  int best_k = 0;
  double best = -1.0;
  for (int k = 0; k < kScan; ++k) {
    const double v = mutual_info(p, overlap, k * step);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  const double theta = golden_section_minimize(
      [&](double t) { return -mutual_info(p, overlap, t); }, (best_k - 1) * step,
      (best_k + 1) * step, search_tol);
  return std::max(best, mutual_info(p, overlap, theta));
}

double bagan_l1(double p, double overlap) {
  const double c = 2.0 * std::sqrt(p * (1.0 - p)) * overlap;
  const double path = 2.0 * helstrom_success(p, overlap) - 1.0;
  return c * c + path * path;
}

double bagan_relent(double p, double overlap) {
  require_unit_interval(p, "prior");
  if (p == 0.0 || p == 1.0)
    throw ValidationError("degenerate prior: H({p_i}) = 0 at p in {0, 1}");
  const DensityMatrix rho = interferometer_state(InterferometerConfig::two_path(p, overlap));
  const double c_re = coherence(rho, MeasureKind::RelEntropy);
  const double acc = accessible_info(p, overlap, 1e-10);
  return (c_re + acc) / binary_entropy(p);
}

DiscriminationReport bagan_report(double p, double overlap) {
  require_unit_interval(p, "prior");
  require_unit_interval(overlap, "overlap");
  DiscriminationReport rep;
  rep.prior_p = p;
  rep.overlap = overlap;
  rep.p_success = helstrom_success(p, overlap);
  rep.acc_bits = accessible_info(p, overlap, 1e-10);
  rep.eq16_lhs = bagan_l1(p, overlap);
  rep.shannon_h = binary_entropy(p);
  rep.eq17_lhs = (p == 0.0 || p == 1.0) ? std::numeric_limits<double>::quiet_NaN()
                                        : bagan_relent(p, overlap);

  if (rep.p_success < std::max(p, 1.0 - p) - 1e-12 || rep.p_success > 1.0 + 1e-12)
    throw std::logic_error("Helstrom probability left its allowed range");
  if (rep.acc_bits < -1e-12 || rep.acc_bits > rep.shannon_h + 1e-9)
    throw std::logic_error("accessible information left [0, H]");
  return rep;
}

std::vector<DiscriminationReport> bagan_grid(int n) {
  if (n < 2) throw ValidationError("grid needs at least 2 points per axis");
  std::vector<DiscriminationReport> out;
  out.reserve(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.push_back(bagan_report(double(i) / (n - 1), double(j) / (n - 1)));
  return out;
}

}  // namespace triad
