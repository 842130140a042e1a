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
#ifndef VQSVD_SOLVER_HPP_
#define VQSVD_SOLVER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "vqsvd/circuit.hpp"
#include "vqsvd/estimator.hpp"
#include "vqsvd/pauli.hpp"

namespace vqsvd {

struct AnsatzSpec {
  enum class Kind { kHardwareEfficient, kCandidate };

  Kind kind = Kind::kHardwareEfficient;
  AnsatzCandidate candidate = AnsatzCandidate::kA;
  int depth = 20;  // block count for candidates
  RotationMode mode = RotationMode::kReal;

  ParamCircuit build(int n_qubits) const;
};

struct VqsvdConfig {
  std::size_t rank = 1;          // T
  std::vector<double> weights;   // empty selects the default q_j = T+1-j
  AnsatzSpec u_ansatz;
  AnsatzSpec v_ansatz;
  std::size_t max_iterations = 200;
  double tolerance = 1e-6;  // <= 0 disables the convergence window
  double learning_rate = 0.05;
  double lr_decay = 0.0;  // LR_t = learning_rate / (1 + lr_decay * t)
  std::uint64_t seed = 0;
  EstimatorConfig estimator;
  bool record_m_traces = false;
  // Warm starts; empty selects the uniform [0, 2pi) initialization.
  std::vector<double> init_alpha;
  std::vector<double> init_beta;

  std::vector<double> effective_weights() const;
  /// Checks T <= dim and that weights are strictly decreasing positives.
  void validate(std::size_t dim) const;
};

struct VqsvdResult {
  std::vector<double> m_values;          // descending after the final sort
  std::vector<std::size_t> basis_order;  // basis index j behind each m value
  std::vector<double> alpha_star;
  std::vector<double> beta_star;
  std::vector<double> loss_history;      // entry i = loss before update i
  std::vector<std::vector<double>> m_history;  // optional exact m traces
  bool converged = false;
  bool negative_m_present = false;
  std::size_t iterations = 0;
  int n_qubits = 0;
  VqsvdConfig config;  // settings the run actually used
};

/// L = sum_j q_j Re<psi_j|U(alpha)^+ M V(beta)|psi_j> over the first T
/// computational basis states, evaluated with the configured estimator.
double loss(const LcuDecomposition& lcu, std::span<const double> u_params,
            std::span<const double> v_params, const VqsvdConfig& config);

/// Same loss with explicit circuits; q supplies the weights (and T).
double loss(const LcuDecomposition& lcu, const ParamCircuit& u,
            std::span<const double> u_params, const ParamCircuit& v,
            std::span<const double> v_params, const std::vector<double>& q,
            const EstimatorConfig& estimator);

/// Oracle-side loss sum_j q_j Re(U^+ M V)_{jj} for explicit unitaries;
/// rejects inputs with ||U^+U - I||_F > 1e-8.
double loss_of_unitaries(const DenseMatrix& m, const DenseMatrix& u,
                         const DenseMatrix& v, const std::vector<double>& q);

struct LossGradient {
  std::vector<double> alpha;
  std::vector<double> beta;
};

/// Parameter-shift gradient: each component is half the loss at a single
/// pi-shifted parameter (valid for the exp(-i P theta/2) gate family).
LossGradient gradient(const LcuDecomposition& lcu,
                      std::span<const double> u_params,
                      std::span<const double> v_params,
                      const VqsvdConfig& config);

LossGradient gradient(const LcuDecomposition& lcu, const ParamCircuit& u,
                      std::span<const double> u_params, const ParamCircuit& v,
                      std::span<const double> v_params,
                      const std::vector<double>& q,
                      const EstimatorConfig& estimator);

/// The full optimization loop: uniform [0, 2pi) init from config.seed, Adam
/// ascent on L, sliding-window convergence, exact-mode final m values.
/// Non-convergence is reported through the result flag, not an error.
VqsvdResult run(const LcuDecomposition& lcu, const VqsvdConfig& config);

struct VectorFamilies {
  DenseMatrix lefts;   // columns U(alpha*)|psi_j| in m_values order
  DenseMatrix rights;  // columns V(beta*)|psi_j>
};

VectorFamilies extract_vectors(const VqsvdResult& result, std::size_t t);

}  // namespace vqsvd

#endif  // VQSVD_SOLVER_HPP_
