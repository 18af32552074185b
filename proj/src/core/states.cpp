// SPDX-License-Identifier: Apache-2.0
#include "core/states.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace triad {

namespace {

void require_hermitian_named(const ComplexMatrix& m, const char* what) {
  if (!m.square()) {
    std::ostringstream msg;
    msg << what << " must be square, got " << m.rows() << "x" << m.cols();
    throw ValidationError(msg.str());
  }
  if (!m.all_finite()) {
    std::ostringstream msg;
    msg << what << " has non-finite entries";
    throw ValidationError(msg.str());
  }
  int wi = 0, wj = 0;
  const double defect = m.hermiticity_defect(&wi, &wj);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << what << " is not Hermitian: max |A(i,j) - conj(A(j,i))| = " << defect << " at ("
        << wi << ", " << wj << ")";
    throw ValidationError(msg.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(1, 1) {
  require_hermitian_named(m, "density matrix");
  m = m.symmetrized();

  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw ValidationError(msg.str());
  }

  const Spectrum spec = eig_hermitian(m);
  const double lam_min = spec.eigenvalues.back();
  if (lam_min < -kEigenClampTol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << lam_min;
    throw ValidationError(msg.str());
  }
  if (lam_min < 0.0) {
    // Clamp the roundoff band to zero and rebuild; exact inputs skip this
    // branch so e.g. diagonal matrices pass through bit-identical.
    const int n = m.rows();
    ComplexMatrix rebuilt(n, n);
    for (int k = 0; k < n; ++k) {
      const double lam = std::max(spec.eigenvalues[k], 0.0);
      if (lam == 0.0) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          rebuilt(i, j) += lam * spec.eigenvectors(i, k) * std::conj(spec.eigenvectors(j, k));
    }
    m = rebuilt.symmetrized();
  }

  const double tr2 = m.trace().real();
  if (tr2 != 1.0) m *= cplx(1.0 / tr2);
  mat_ = std::move(m);
}

double DensityMatrix::purity() const {
  double s = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) s += std::norm(mat_(i, j));
  return s;
}

PureState::PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw ValidationError("pure state needs at least one amplitude");
  double norm2 = 0.0;
  for (const cplx& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ValidationError("pure state has non-finite amplitudes");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "pure state squared norm is " << norm2 << ", expected 1";
    throw ValidationError(msg.str());
  }
}

DensityMatrix PureState::projector() const { return DensityMatrix(outer(amps_, amps_)); }

InterferometerConfig::InterferometerConfig(std::vector<double> path_probs,
                                           ComplexMatrix detector_gram)
    : probs_(std::move(path_probs)), gram_(std::move(detector_gram)) {
  if (probs_.empty()) throw ValidationError("interferometer needs at least one path");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!std::isfinite(probs_[i]) || probs_[i] < 0.0) {
      std::ostringstream msg;
      msg << "path probability " << i << " is " << probs_[i] << ", must be >= 0";
      throw ValidationError(msg.str());
    }
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > kHermitianTol) {
    std::ostringstream msg;
    msg << "path probabilities sum to " << sum << ", expected 1";
    throw ValidationError(msg.str());
  }

  require_hermitian_named(gram_, "detector Gram matrix");
  if (gram_.rows() != int(probs_.size()))
    throw ValidationError("detector Gram dimension does not match path count");
  for (int i = 0; i < gram_.rows(); ++i) {
    if (std::abs(gram_(i, i) - cplx(1.0)) > kHermitianTol) {
      std::ostringstream msg;
      msg << "detector Gram diagonal entry " << i << " is not 1";
      throw ValidationError(msg.str());
    }
  }
  const Spectrum spec = eig_hermitian(gram_);
  if (spec.eigenvalues.back() < -kEigenClampTol) {
    std::ostringstream msg;
    msg << "detector Gram matrix is not positive semidefinite (eigenvalue "
        << spec.eigenvalues.back() << ")";
    throw ValidationError(msg.str());
  }
}

InterferometerConfig InterferometerConfig::two_path(double p, cplx overlap) {
  ComplexMatrix gram(2, 2);
  gram(0, 0) = 1.0;
  gram(1, 1) = 1.0;
  gram(0, 1) = overlap;
  gram(1, 0) = std::conj(overlap);
  return InterferometerConfig({p, 1.0 - p}, gram);
}

InterferometerConfig InterferometerConfig::from_detector_states(
    const std::vector<double>& path_probs, const std::vector<std::vector<cplx>>& detectors) {
  const int d = int(detectors.size());
  if (d == 0) throw ValidationError("no detector states given");
  const std::size_t len = detectors[0].size();
  for (const auto& v : detectors)
    if (v.size() != len) throw ValidationError("detector states have mismatched lengths");
  ComplexMatrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cplx g = 0.0;
      for (std::size_t k = 0; k < len; ++k) g += std::conj(detectors[i][k]) * detectors[j][k];
      gram(i, j) = g;
    }
  return InterferometerConfig(path_probs, gram);
}

double BlochVector::norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

const ComplexMatrix& pauli(int k) {
  static const ComplexMatrix s1 = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  static const ComplexMatrix s2 =
      ComplexMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
  static const ComplexMatrix s3 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  switch (k) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw ValidationError("Pauli index must be 1, 2, or 3");
  }
}

DensityMatrix interferometer_state(const InterferometerConfig& cfg) {
  const int d = cfg.paths();
  const auto& p = cfg.path_probs();
  const auto& g = cfg.detector_gram();
  ComplexMatrix rho(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      rho(i, j) = std::sqrt(p[i] * p[j]) * std::conj(g(i, j));
  return DensityMatrix(rho);
}

PureState diagonal_pure_state(const DensityMatrix& rho) {
  std::vector<cplx> amps(rho.dim());
  for (int i = 0; i < rho.dim(); ++i) amps[i] = std::sqrt(std::max(rho(i, i).real(), 0.0));
  return PureState(std::move(amps));
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix m(rho.dim(), rho.dim());
  for (int i = 0; i < rho.dim(); ++i) m(i, i) = rho(i, i).real();
  return DensityMatrix(m);
}

DensityMatrix from_bloch(const BlochVector& b) {
  if (!std::isfinite(b.norm())) throw ValidationError("Bloch vector has non-finite entries");
  if (b.norm() > 1.0 + kHermitianTol) {
    std::ostringstream msg;
    msg << "Bloch vector length " << b.norm() << " exceeds 1";
    throw ValidationError(msg.str());
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + b.r3);
  m(1, 1) = 0.5 * (1.0 - b.r3);
  m(0, 1) = 0.5 * cplx(b.r1, -b.r2);
  m(1, 0) = 0.5 * cplx(b.r1, b.r2);
  return DensityMatrix(m);
}

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ValidationError("Bloch representation requires a qubit (d = 2)");
  BlochVector b;
  b.r1 = 2.0 * rho(0, 1).real();
  b.r2 = -2.0 * rho(0, 1).imag();
  b.r3 = rho(0, 0).real() - rho(1, 1).real();
  return b;
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  if (d < 1) throw ValidationError("dimension must be positive");
  if (rank < 1 || rank > d) {
    std::ostringstream msg;
    msg << "rank " << rank << " out of range [1, " << d << "]";
    throw ValidationError(msg.str());
  }
  Rng rng(seed);
  ComplexMatrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix m = g * g.dagger();
  m *= cplx(1.0 / m.trace().real());
  return DensityMatrix(m);
}

PureState random_pure(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("dimension must be positive");
  Rng rng(seed);
  std::vector<cplx> amps(d);
  double norm2 = 0.0;
  for (cplx& a : amps) {
    a = rng.complex_gaussian();  // Box-Muller radius is strictly positive
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& a : amps) a *= inv;
  return PureState(std::move(amps));
}

}  // namespace triad
