// SPDX-License-Identifier: Apache-2.0
#include "core/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"

namespace triad {

namespace {

void require_hermitian(const ComplexMatrix& a) {
  if (!a.square()) throw ValidationError("matrix must be square");
  if (!a.all_finite()) throw ValidationError("matrix has non-finite entries");
  int wi = 0, wj = 0;
  const double defect = a.hermiticity_defect(&wi, &wj);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |A(i,j) - conj(A(j,i))| = " << defect << " at ("
        << wi << ", " << wj << ")";
    throw ValidationError(msg.str());
  }
}

double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The plane rotation is
//   J[p][p] = c,  J[p][q] = -s e^{i phi},  J[q][p] = s e^{-i phi},  J[q][q] = c
// with phi = arg(a_pq); A <- J^dagger A J, V <- V J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx phase = apq / r;  // e^{i phi}

  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * r);
  // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0.
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  double t = -sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  if (!std::isfinite(tau)) t = 0.0;  // r denormal: rotation is a no-op
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.rows();
  // Column update B = A J touches columns p and q only.
  for (int k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * c + akq * (s * std::conj(phase));
    a(k, q) = akp * (-s * phase) + akq * c;
  }
  // Row update A' = J^dagger B touches rows p and q only.
  for (int l = 0; l < n; ++l) {
    const cplx apl = a(p, l), aql = a(q, l);
    a(p, l) = apl * c + aql * (s * phase);
    a(q, l) = apl * (-s * std::conj(phase)) + aql * c;
  }
  // Exact by construction; wipe the rounding residue.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (int k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * c + vkq * (s * std::conj(phase));
    v(k, q) = vkp * (-s * phase) + vkq * c;
  }
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& h) {
  require_hermitian(h);
  const int n = h.rows();

  ComplexMatrix a = h.symmetrized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr double kOffdiagTol = 1e-13;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && offdiag_frobenius(a) >= kOffdiagTol; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Spectrum spec;
  spec.eigenvalues.resize(n);
  spec.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    spec.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) spec.eigenvectors(i, k) = v(i, order[k]);
  }
  return spec;
}

double shannon_entropy(const std::vector<double>& p) {
  if (p.empty()) throw ValidationError("probability vector is empty");
  double sum = 0.0, h = 0.0;
  for (double x : p) {
    if (!std::isfinite(x)) throw ValidationError("probability vector has non-finite entries");
    if (x < -kEigenClampTol) {
      std::ostringstream msg;
      msg << "probability vector has negative entry " << x;
      throw ValidationError(msg.str());
    }
    if (x < 0.0) x = 0.0;
    sum += x;
    if (x > 0.0) h -= x * std::log2(x);
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum << ", expected 1";
    throw ValidationError(msg.str());
  }
  // entries at the edge of the accepted tolerance band can push the sum a
  // hair past 1 and the result a few 1e-11 below 0
  return std::max(h, 0.0);
}

double binary_entropy(double p) { return shannon_entropy({p, 1.0 - p}); }

double von_neumann_entropy(const ComplexMatrix& rho) {
  return shannon_entropy(eig_hermitian(rho).eigenvalues);
}

double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw ValidationError("relative entropy requires matrices of equal dimension");

  const Spectrum srho = eig_hermitian(rho);
  const Spectrum ssig = eig_hermitian(sigma);
  const int n = rho.rows();

  // -Tr(rho log sigma) in sigma's eigenbasis: weights w_j = <v_j| rho |v_j>.
  double cross = 0.0;
  for (int j = 0; j < n; ++j) {
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx row = 0.0;
      for (int k = 0; k < n; ++k) row += rho(i, k) * ssig.eigenvectors(k, j);
      acc += std::conj(ssig.eigenvectors(i, j)) * row;
    }
    const double w = std::max(acc.real(), 0.0);
    const double mu = ssig.eigenvalues[j];
    if (mu < 1e-12) {
      if (w > 1e-10) return std::numeric_limits<double>::infinity();
      continue;  // negligible weight on a null direction
    }
    cross -= w * std::log2(mu);
  }

  double srho_bits = 0.0;
  for (double lam : srho.eigenvalues) {
    if (lam < -kEigenClampTol) throw ValidationError("relative entropy input has negative eigenvalue");
    if (lam > 0.0) srho_bits -= lam * std::log2(lam);
  }
  return std::max(0.0, cross - srho_bits);
}

double trace_norm(const ComplexMatrix& a) {
  const Spectrum s = eig_hermitian(a);
  double t = 0.0;
  for (double lam : s.eigenvalues) t += std::abs(lam);
  return t;
}

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  if (!(hi >= lo)) throw std::logic_error("golden section bracket is inverted");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

bool majorizes(std::vector<double> x, std::vector<double> y) {
  if (x.empty() || x.size() != y.size())
    throw ValidationError("majorization requires non-empty vectors of equal length");
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  if (std::abs(sx - sy) > 1e-10) {
    std::ostringstream msg;
    msg << "majorization requires equal totals, got " << sx << " vs " << sy;
    throw ValidationError(msg.str());
  }
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    px += x[k];
    py += y[k];
    if (px < py - 1e-12) return false;
  }
  return true;
}

}  // namespace triad
