// SPDX-License-Identifier: Apache-2.0
#include "core/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace triad {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {
  if (rows < 1 || cols < 1) throw ValidationError("matrix dimensions must be positive");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const int r = int(rows.size());
  const int c = r > 0 ? int(rows.begin()->size()) : 0;
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != c) throw ValidationError("ragged initializer rows");
    int j = 0;
    for (const cplx& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double ComplexMatrix::hermiticity_defect(int* worst_i, int* worst_j) const {
  double worst = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j) {
      const double d = std::abs((*this)(i, j) - std::conj((*this)(j, i)));
      if (d > worst) {
        worst = d;
        if (worst_i) *worst_i = i;
        if (worst_j) *worst_j = j;
      }
    }
  return worst;
}

ComplexMatrix ComplexMatrix::symmetrized() const {
  ComplexMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    m(i, i) = (*this)(i, i).real();
    for (int j = i + 1; j < cols_; ++j) {
      const cplx z = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (cplx& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::logic_error("matrix product shape mismatch");
  ComplexMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(double scale, ComplexMatrix a) { return a *= cplx(scale); }

ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  ComplexMatrix m(int(u.size()), int(v.size()));
  for (int i = 0; i < int(u.size()); ++i)
    for (int j = 0; j < int(v.size()); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

}  // namespace triad
