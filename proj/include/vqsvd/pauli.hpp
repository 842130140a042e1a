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
#ifndef VQSVD_PAULI_HPP_
#define VQSVD_PAULI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "vqsvd/linalg.hpp"

namespace vqsvd {

/// Tensor product of single-qubit operators from {I, X, Y, Z}; qubit 0 is
/// the leftmost label character and the most significant basis-index bit.
struct PauliString {
  std::string label;

  int n_qubits() const { return static_cast<int>(label.size()); }
  DenseMatrix to_matrix() const;
  /// out[i] = sum_j P[i][j] in[j]; a Pauli row has exactly one nonzero.
  void apply(const std::vector<cplx>& in, std::vector<cplx>& out) const;
};

/// Cyclic shift on dimension dim with rows (P_k)_{i,(i+k) mod dim} = 1,
/// so that sum_k c_k P_k is the circulant with first row (c_0 .. c_{dim-1}).
struct CyclicPermutation {
  std::size_t shift;
  std::size_t dim;

  DenseMatrix to_matrix() const;
  void apply(const std::vector<cplx>& in, std::vector<cplx>& out) const;
};

/// One (coefficient, unitary) pair of an LCU.
struct LcuTerm {
  cplx coeff;
  std::variant<PauliString, CyclicPermutation, DenseMatrix> unitary;
};

DenseMatrix term_matrix(const LcuTerm& term);
void apply_term(const LcuTerm& term, const std::vector<cplx>& in,
                std::vector<cplx>& out);

/// M = sum_k c_k A_k. `dim` is the matrix dimension; n_qubits() is defined
/// only when dim is a power of two (Pauli decompositions always are,
/// circulant ones need not be).
struct LcuDecomposition {
  std::vector<LcuTerm> terms;
  std::size_t dim = 0;
  double l1_norm = 0.0;

  int n_qubits() const;           // -1 when dim is not a power of two
  double recompute_l1() const;    // sum |c_k|
};

/// c_P = Tr(P M) / 2^n over all 4^n Pauli strings; |c_P| < 1e-14 dropped.
/// Enumeration order is lexicographic in {I,X,Y,Z} per qubit, qubit 0 first.
LcuDecomposition pauli_decompose(const DenseMatrix& m);

DenseMatrix lcu_reconstruct(const LcuDecomposition& lcu);

/// Circulant C_d with first row (c_0 .. c_{d-1}) as sum_k c_k P_k.
LcuDecomposition circulant_decompose(const std::vector<cplx>& first_row);

/// i.i.d. term indices with P(k) = |c_k| / l1_norm; deterministic given seed.
std::vector<std::size_t> importance_sample_terms(const LcuDecomposition& lcu,
                                                 std::size_t count,
                                                 std::uint64_t seed);

/// Hoeffding sample budget ceil(2 l1^2 ln(2/delta) / epsilon^2).
std::size_t sample_count(double l1, double epsilon, double delta);

// LCU text format: header "n_qubits K", then K lines "re,im LABEL" for Pauli
// terms or "re,im PERM k" for cyclic shifts. Requires a power-of-two dim.
LcuDecomposition read_lcu(std::istream& in, const std::string& filename = "<stream>");
LcuDecomposition read_lcu_file(const std::string& path);
void write_lcu(std::ostream& out, const LcuDecomposition& lcu);
void write_lcu_file(const std::string& path, const LcuDecomposition& lcu);

}  // namespace vqsvd

#endif  // VQSVD_PAULI_HPP_
