// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace triad {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Everything in this library is small
// (d <= 64), so no attempt is made at blocking or sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  cplx& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  ComplexMatrix dagger() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  // max over (i,j) of |A(i,j) - conj(A(j,i))|; square input assumed.
  double hermiticity_defect(int* worst_i = nullptr, int* worst_j = nullptr) const;

  // (A + A^dagger) / 2, exactly Hermitian entry by entry.
  ComplexMatrix symmetrized() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);
ComplexMatrix operator*(double scale, ComplexMatrix a);

// |u><v|
ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v);

}  // namespace triad
