// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "core/matrix.hpp"

namespace triad {

// Entrywise tolerance on |A(i,j) - conj(A(j,i))| for inputs that must be Hermitian.
inline constexpr double kHermitianTol = 1e-10;

// Eigenvalues of nominally positive matrices in [-kEigenClampTol, 0) are
// rounded up to zero; anything more negative is rejected.
inline constexpr double kEigenClampTol = 1e-10;

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi diagonalization. Deterministic; converges when the
// off-diagonal Frobenius norm drops below 1e-13 (at most 100 sweeps).
Spectrum eig_hermitian(const ComplexMatrix& h);

// H(p) = -sum p_i log2 p_i with 0 log 0 := 0. Requires p_i >= 0 (entries in
// [-1e-10, 0) are clamped to zero) and sum p_i = 1 within 1e-10.
double shannon_entropy(const std::vector<double>& p);

double binary_entropy(double p);

// S(rho) in bits; rho must be Hermitian with unit trace (full density-matrix
// validation lives in states.hpp; this is the spectral kernel).
double von_neumann_entropy(const ComplexMatrix& rho);

// S(rho||sigma) in bits; +infinity when support(rho) is not contained in
// support(sigma) (sigma eigenvalue < 1e-12 carrying rho weight > 1e-10).
double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Sum of |eigenvalue| for Hermitian input.
double trace_norm(const ComplexMatrix& a);

// True iff every partial sum of descending-sorted x dominates that of y.
// Requires equal lengths and equal totals within 1e-10.
bool majorizes(std::vector<double> x, std::vector<double> y);

// Abscissa of the minimum of a unimodal f on [lo, hi], bracketed down to tol.
double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol);

}  // namespace triad
