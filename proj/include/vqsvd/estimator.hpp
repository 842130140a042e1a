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
#ifndef VQSVD_ESTIMATOR_HPP_
#define VQSVD_ESTIMATOR_HPP_

#include <cstdint>
#include <span>
#include <utility>

#include "vqsvd/circuit.hpp"
#include "vqsvd/pauli.hpp"

namespace vqsvd {

enum class EstimatorMode { kExact, kShots, kSampledTerms };

/// Loss-evaluation backend selection. The physical Hadamard-test ancilla is
/// never materialized: the simulator computes the outcome probability
/// analytically and samples it, which has identical statistics.
struct EstimatorConfig {
  EstimatorMode mode = EstimatorMode::kExact;
  std::size_t shots_per_term = 0;  // >= 1 required in shots mode
  std::size_t term_samples = 0;    // >= 1 required in sampled-terms mode
  std::uint64_t seed = 0;

  void validate() const;
};

/// (Re, Im) of <psi | w_applied>.
std::pair<double, double> exact_re_im(const StateVector& psi,
                                      const StateVector& w_applied);

/// Simulated Hadamard test for Re<psi|W|psi>: p0 = (1 + Re)/2, `shots`
/// Bernoulli draws, returns (#0 - #1)/shots. Unbiased.
double hadamard_test_re(const StateVector& psi, const DenseMatrix& w,
                        std::size_t shots, std::uint64_t seed);

/// Same with outcome expectation +Im<psi|W|psi> (i-phased ancilla variant).
double hadamard_test_im(const StateVector& psi, const DenseMatrix& w,
                        std::size_t shots, std::uint64_t seed);

/// m_j = Re<psi_j| U(alpha)^+ M V(beta) |psi_j> for M given as an LCU.
/// Exact mode applies each term densely; shots mode combines per-term
/// Hadamard-test estimates as sum_k Re[c_k (re_k + i im_k)]; sampled mode
/// averages l1 * (phase-absorbed term estimates) over importance-sampled
/// term indices. Deterministic given config.seed.
double matrix_element(const LcuDecomposition& lcu, const ParamCircuit& u,
                      std::span<const double> alpha, const ParamCircuit& v,
                      std::span<const double> beta, std::size_t basis_j,
                      const EstimatorConfig& config);

/// Full complex <psi_j| U(alpha)^+ M V(beta) |psi_j>. The sampling backends
/// estimate both quadratures per term; used by the Frobenius-mass verifier,
/// which squares moduli.
cplx matrix_element_complex(const LcuDecomposition& lcu, const ParamCircuit& u,
                            std::span<const double> alpha,
                            const ParamCircuit& v, std::span<const double> beta,
                            std::size_t basis_j, const EstimatorConfig& config);

}  // namespace vqsvd

#endif  // VQSVD_ESTIMATOR_HPP_
