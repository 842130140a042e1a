/* Copyright 2026 The VQSVD Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef VQSVD_LINALG_HPP_
#define VQSVD_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace vqsvd {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. All sizes in this project are small
/// (<= 64x64), so storage is a flat vector and operations are direct loops.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<cplx>& entries() const { return entries_; }
  cplx* data() { return entries_.data(); }
  const cplx* data() const { return entries_.data(); }

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;
  /// Throws std::invalid_argument if any entry is NaN/inf.
  void require_finite(const std::string& what) const;

  std::vector<cplx> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<cplx>& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(cplx s, const DenseMatrix& a);

/// y = A x
std::vector<cplx> matvec(const DenseMatrix& a, const std::vector<cplx>& x);

/// Full SVD M = sum_j d_j u_j v_j^dagger with d_1 >= d_2 >= ... >= 0.
/// left_vectors is rows x min(rows,cols), right_vectors cols x min(rows,cols);
/// both have orthonormal columns.
struct SvdTriple {
  std::vector<double> singular_values;
  DenseMatrix left_vectors;
  DenseMatrix right_vectors;

  /// Count of singular values above 1e-12 * d_1.
  std::size_t rank() const;
};

/// One-sided Jacobi SVD. Deterministic for a fixed input; the first nonzero
/// component of each right vector is made real-positive to fix the gauge.
SvdTriple classical_svd(const DenseMatrix& m);

double frobenius_norm(const DenseMatrix& m);

/// sum_{j<t} values[j] * lefts_j * rights_j^dagger.
DenseMatrix reconstruct_rank_t(const std::vector<double>& values,
                               const DenseMatrix& lefts,
                               const DenseMatrix& rights, std::size_t t);

struct PolarFactors {
  DenseMatrix w;  // unitary
  DenseMatrix p;  // Hermitian PSD, m = w * p
};

PolarFactors polar_decompose(const DenseMatrix& m);

// Text matrix format shared repo-wide: header "rows cols field" with
// field in {real, complex}; then rows*cols whitespace-separated tokens
// row-major, complex tokens as "re,im". Writers emit 17 significant digits.
DenseMatrix read_matrix(std::istream& in, const std::string& filename = "<stream>");
DenseMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const DenseMatrix& m);
void write_matrix_file(const std::string& path, const DenseMatrix& m);

/// Formats a double with 17 significant digits (round-trippable).
std::string format_g17(double v);

}  // namespace vqsvd

#endif  // VQSVD_LINALG_HPP_
