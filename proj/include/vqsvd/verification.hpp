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
#ifndef VQSVD_VERIFICATION_HPP_
#define VQSVD_VERIFICATION_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vqsvd/solver.hpp"

namespace vqsvd {

/// sum_j (d_j - m_j)^2, both sequences descending, equal length.
double epsilon_d(const std::vector<double>& exact_d,
                 const std::vector<double>& inferred_m);

/// The block-Hermitian embedding [[0, M],[M^+, 0]].
DenseMatrix h_embedding(const DenseMatrix& m);

/// sum_j ||H e_j^+ - m_j e_j^+||^2 + ||H e_j^- + m_j e_j^-||^2 with
/// e_j^{+-} = (|0>u_j +- |1>v_j)/sqrt(2); u_hat/v_hat hold columns.
double epsilon_v(const DenseMatrix& m, const std::vector<double>& inferred_m,
                 const DenseMatrix& u_hat, const DenseMatrix& v_hat);

struct VqfneResult {
  double f_value = 0.0;  // exact-mode value at the optimum
  std::vector<double> alpha_star;
  std::vector<double> beta_star;
  std::vector<double> loss_history;
  bool converged = false;
  std::size_t iterations = 0;
};

/// Frobenius-mass estimator: maximizes F = sum_{j<T} |<u_j|M|v_j>|^2 over
/// the same ansatz family; at the global optimum F = sum_{j<T} d_j^2. The
/// gradient follows the product rule over pi-shifted complex elements and is
/// validated against finite differences in the test suite.
VqfneResult vqfne_run(const LcuDecomposition& lcu, const VqsvdConfig& config);

struct MajorizationReport {
  std::vector<double> margins;  // sum_{j<=k} d_j^2 - sum_{j<=k} |diag|^2
  bool ok = false;              // all margins >= -1e-10
  bool diagonal_equality = false;
};

/// Squared singular values majorize squared diagonal moduli; equality only
/// for diagonal matrices.
MajorizationReport majorization_check(const DenseMatrix& m);

/// Both distance functionals of the vector families; they are equal by the
/// closed form 4 - 2(Re<u|u_hat> + Re<v|v_hat>) per pair, and the call
/// asserts the identity to 1e-10.
std::pair<double, double> distance_equality_check(const DenseMatrix& u,
                                                  const DenseMatrix& v,
                                                  const DenseMatrix& u_hat,
                                                  const DenseMatrix& v_hat);

struct QualityReport {
  double epsilon_d = 0.0;
  double epsilon_v = 0.0;
  double bound_common = 0.0;  // sum_{j<=T} d_j^2 - sum_{j<=T} m_j^2
  double bound_d = 0.0;       // = bound_common
  double bound_v = 0.0;       // = 2 * bound_common
  // The same bound with the oracle top-T mass; equals bound_common when the
  // oracle route was selected. bounds_hold always judges against this one:
  // the variational estimate carries its own optimization error and admits
  // no 1e-8-slack guarantee.
  double bound_common_oracle = 0.0;
  double vqfne_value = 0.0;
  bool vqfne_used = false;
  std::string bound_source;   // "oracle" or "vqfne"
  bool majorization_ok = false;
  std::vector<double> majorization_margins;
  bool bounds_hold = false;
};

/// Assembles the report for a finished run; when a VQFNE result is supplied
/// its F value feeds bound_common, otherwise the oracle top-T mass does.
QualityReport assess_quality(const DenseMatrix& m, const VqsvdResult& result,
                             const std::optional<VqfneResult>& vqfne = {});

/// Flat key-value block, appended to result files by the CLI.
void write_quality_report(std::ostream& out, const QualityReport& report);

}  // namespace vqsvd

#endif  // VQSVD_VERIFICATION_HPP_
