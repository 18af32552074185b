// SPDX-License-Identifier: Apache-2.0
#include "core/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace triad {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops) : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) throw ValidationError("channel needs at least one Kraus operator");
  const int d = ops_[0].rows();
  for (const auto& k : ops_) {
    if (!k.square() || k.rows() != d)
      throw ValidationError("Kraus operators must all be square with equal dimension");
    if (!k.all_finite()) throw ValidationError("Kraus operator has non-finite entries");
  }
  ComplexMatrix sum(d, d);
  for (const auto& k : ops_) sum += k.dagger() * k;
  sum -= ComplexMatrix::identity(d);
  const double defect = sum.max_abs();
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "Kraus completeness violated: max |sum K^dag K - I| = " << defect;
    throw ValidationError(msg.str());
  }
}

KrausChannel KrausChannel::dephasing(int d) {
  if (d < 1) throw ValidationError("dimension must be positive");
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (int i = 0; i < d; ++i) {
    ComplexMatrix k(d, d);
    k(i, i) = 1.0;
    ops.push_back(std::move(k));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::unitary(ComplexMatrix u) {
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::move(u));
  return KrausChannel(std::move(ops));  // completeness check doubles as U^dag U = I
}

KrausChannel KrausChannel::permutation(const std::vector<int>& perm) {
  const int d = int(perm.size());
  std::vector<bool> seen(d, false);
  for (int v : perm) {
    if (v < 0 || v >= d || seen[v]) throw ValidationError("not a permutation of 0..d-1");
    seen[v] = true;
  }
  ComplexMatrix u(d, d);
  for (int j = 0; j < d; ++j) u(perm[j], j) = 1.0;  // |perm(j)><j|
  return unitary(std::move(u));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) throw ValidationError("channel and state dimensions differ");
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto& k : ch.ops()) out += k * rho.matrix() * k.dagger();
  return DensityMatrix(out);
}

std::vector<Outcome> selective_apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) throw ValidationError("channel and state dimensions differ");
  std::vector<Outcome> outcomes;
  double total = 0.0;
  for (const auto& k : ch.ops()) {
    ComplexMatrix m = k * rho.matrix() * k.dagger();
    const double p = m.trace().real();
    total += p;
    if (p < 1e-12) continue;  // do not divide by a vanishing probability
    m *= cplx(1.0 / p);
    outcomes.push_back({p, DensityMatrix(std::move(m))});
  }
  if (std::abs(total - 1.0) > kHermitianTol)
    throw std::logic_error("selective outcome probabilities fail to sum to 1");
  return outcomes;
}

bool is_incoherent(const KrausChannel& ch, double tol) {
  for (const auto& k : ch.ops())
    for (int c = 0; c < k.cols(); ++c) {
      int hits = 0;
      for (int r = 0; r < k.rows(); ++r)
        if (std::abs(k(r, c)) > tol && ++hits > 1) return false;
    }
  return true;
}

KrausChannel random_incoherent_channel(int d, int n_kraus, std::uint64_t seed) {
  if (d < 1) throw ValidationError("dimension must be positive");
  if (n_kraus < 1) throw ValidationError("need at least one Kraus operator");
  Rng rng(seed);

  // row_of[l][c] = row of column c's entry in operator l, or -1.
  std::vector<std::vector<int>> row_of(n_kraus, std::vector<int>(d, -1));
  std::vector<int> placements(d, 0);

  for (int l = 0; l < n_kraus; ++l) {
    // Random column-to-row map, then resolve row collisions inside this
    // operator by a random priority order: each row keeps one column, the
    // rest lose their entry here. Distinct rows keep K^dag K diagonal.
    std::vector<int> wanted(d);
    for (int c = 0; c < d; ++c) wanted[c] = int(rng.uniform_int(std::uint64_t(d)));
    std::vector<int> priority(d);
    std::iota(priority.begin(), priority.end(), 0);
    for (int i = d - 1; i > 0; --i)
      std::swap(priority[i], priority[rng.uniform_int(std::uint64_t(i) + 1)]);
    std::vector<bool> row_taken(d, false);
    for (int c : priority) {
      if (row_taken[wanted[c]]) continue;
      row_taken[wanted[c]] = true;
      row_of[l][c] = wanted[c];
      ++placements[c];
    }
  }

  // A column that lost every collision would make completeness unreachable;
  // give it a still-free row (one always exists: an operator holds at most
  // d - 1 other columns).
  for (int c = 0; c < d; ++c) {
    if (placements[c] > 0) continue;
    const int l = int(rng.uniform_int(std::uint64_t(n_kraus)));
    std::vector<bool> row_taken(d, false);
    for (int cc = 0; cc < d; ++cc)
      if (row_of[l][cc] >= 0) row_taken[row_of[l][cc]] = true;
    std::vector<int> free_rows;
    for (int r = 0; r < d; ++r)
      if (!row_taken[r]) free_rows.push_back(r);
    row_of[l][c] = free_rows[rng.uniform_int(free_rows.size())];
    ++placements[c];
  }

  std::vector<ComplexMatrix> ops(n_kraus, ComplexMatrix(d, d));
  std::vector<double> col_norm2(d, 0.0);
  for (int l = 0; l < n_kraus; ++l)
    for (int c = 0; c < d; ++c) {
      if (row_of[l][c] < 0) continue;
      const cplx z = rng.complex_gaussian();
      ops[l](row_of[l][c], c) = z;
      col_norm2[c] += std::norm(z);
    }
  for (int l = 0; l < n_kraus; ++l)
    for (int c = 0; c < d; ++c)
      if (row_of[l][c] >= 0) ops[l](row_of[l][c], c) /= std::sqrt(col_norm2[c]);

  return KrausChannel(std::move(ops));
}

AxiomReport check_axioms(MeasureKind m, int d, int trials, std::uint64_t seed) {
  return check_axioms_with(
      measure_name(m), [m](const DensityMatrix& rho) { return coherence(rho, m); }, d, trials,
      seed);
}

AxiomReport check_axioms_with(const std::string& label, const MeasureFn& fn, int d, int trials,
                              std::uint64_t seed) {
  if (d < 2) throw ValidationError("axiom checks need d >= 2");
  if (trials < 1) throw ValidationError("need at least one trial");

  AxiomReport rep;
  rep.measure_label = label;
  rep.dim = d;
  rep.trials = trials;
  double raw_c1 = -1.0, raw_c2a = -1.0, raw_c2b = -1.0, raw_c3 = -1.0;

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, std::uint64_t(t));
    Rng rng(trial_seed);
    const int rank = 1 + int(rng.uniform_int(std::uint64_t(d)));
    const int n_kraus = 1 + int(rng.uniform_int(std::uint64_t(d) + 1));
    const DensityMatrix rho = random_density(d, rank, rng.next_u64());
    const KrausChannel ch = random_incoherent_channel(d, n_kraus, rng.next_u64());
    const double base = fn(rho);

    // (C1) the measure vanishes on incoherent states.
    const double c1 = fn(dephase(rho));
    // (C2a) monotone under the full channel.
    const double c2a = fn(apply(ch, rho)) - base;
    // (C2b) monotone on average under selective readout.
    double avg = 0.0;
    for (const Outcome& o : selective_apply(ch, rho)) avg += o.probability * fn(o.state);
    const double c2b = avg - base;
    // (C3) convexity over a random 3-state mixture.
    double q[3];
    double qsum = 0.0;
    for (double& x : q) {
      x = rng.uniform_pos();
      qsum += x;
    }
    ComplexMatrix mix(d, d);
    double avg_c = 0.0;
    for (double& x : q) {
      x /= qsum;
      const int part_rank = 1 + int(rng.uniform_int(std::uint64_t(d)));
      const std::uint64_t part_seed = rng.next_u64();
      const DensityMatrix part = random_density(d, part_rank, part_seed);
      mix += x * part.matrix();
      avg_c += x * fn(part);
    }
    const double c3 = fn(DensityMatrix(std::move(mix))) - avg_c;

    if (c1 > raw_c1) raw_c1 = c1, rep.seed_c1 = trial_seed;
    if (c2a > raw_c2a) raw_c2a = c2a, rep.seed_c2a = trial_seed;
    if (c2b > raw_c2b) raw_c2b = c2b, rep.seed_c2b = trial_seed;
    if (c3 > raw_c3) raw_c3 = c3, rep.seed_c3 = trial_seed;
  }

  rep.worst_c1 = std::max(raw_c1, 0.0);
  rep.worst_c2a = std::max(raw_c2a, 0.0);
  rep.worst_c2b = std::max(raw_c2b, 0.0);
  rep.worst_c3 = std::max(raw_c3, 0.0);
  return rep;
}

}  // namespace triad
