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
#include "vqsvd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "train_detail.hpp"
#include "vqsvd/rng.hpp"

namespace vqsvd {

namespace {
constexpr double kPi = std::numbers::pi;
}

ParamCircuit AnsatzSpec::build(int n_qubits) const {
  if (kind == Kind::kHardwareEfficient) {
    return ansatz_hardware_efficient(n_qubits, depth, mode);
  }
  return ansatz_candidate(candidate, n_qubits, depth, mode);
}

std::vector<double> VqsvdConfig::effective_weights() const {
  if (!weights.empty()) return weights;
  std::vector<double> q(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    q[j] = static_cast<double>(rank - j);
  }
  return q;
}

void VqsvdConfig::validate(std::size_t dim) const {
  if (rank == 0 || rank > dim) {
    throw std::invalid_argument("VqsvdConfig: rank must be in [1, dim]");
  }
  const std::vector<double> q = effective_weights();
  if (q.size() != rank) {
    throw std::invalid_argument("VqsvdConfig: weights length must equal rank");
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (!(q[j] > 0.0) || (j + 1 < q.size() && !(q[j] > q[j + 1]))) {
      throw std::invalid_argument(
          "VqsvdConfig: weights must be strictly decreasing positives");
    }
  }
  estimator.validate();
}

namespace {

int lcu_qubits(const LcuDecomposition& lcu) {
  const int n = lcu.n_qubits();
  if (n < 1) {
    throw std::invalid_argument(
        "solver: LCU dimension must be a power of two >= 2");
  }
  return n;
}

double combine(const std::vector<double>& q, const std::vector<cplx>& zs) {
  double s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    s += q[j] * zs[j].real();
  }
  return s;
}

LossGradient exact_gradient(detail::BilinearEngine& engine,
                            std::span<const double> u_params,
                            std::span<const double> v_params,
                            const std::vector<double>& q) {
  LossGradient g;
  g.alpha.resize(u_params.size());
  g.beta.resize(v_params.size());
  std::vector<double> shifted(u_params.begin(), u_params.end());
  engine.prepare_beta(v_params);
  for (std::size_t l = 0; l < u_params.size(); ++l) {
    shifted[l] += kPi;
    g.alpha[l] = 0.5 * combine(q, engine.elements_cached_beta(shifted));
    shifted[l] = u_params[l];
  }
  shifted.assign(v_params.begin(), v_params.end());
  engine.prepare_alpha(u_params);
  for (std::size_t k = 0; k < v_params.size(); ++k) {
    shifted[k] += kPi;
    g.beta[k] = 0.5 * combine(q, engine.elements_cached_alpha(shifted));
    shifted[k] = v_params[k];
  }
  return g;
}

}  // namespace

double loss(const LcuDecomposition& lcu, const ParamCircuit& u,
            std::span<const double> u_params, const ParamCircuit& v,
            std::span<const double> v_params, const std::vector<double>& q,
            const EstimatorConfig& estimator) {
  if (q.size() > lcu.dim) {
    throw std::invalid_argument("loss: more weights than basis states");
  }
  if (lcu.terms.empty()) {
    return 0.0;  // the zero matrix prunes to an empty term list
  }
  double total = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    total += q[j] * matrix_element(lcu, u, u_params, v, v_params, j, estimator);
  }
  return total;
}

double loss(const LcuDecomposition& lcu, std::span<const double> u_params,
            std::span<const double> v_params, const VqsvdConfig& config) {
  const int n = lcu_qubits(lcu);
  config.validate(lcu.dim);
  const ParamCircuit u = config.u_ansatz.build(n);
  const ParamCircuit v = config.v_ansatz.build(n);
  return loss(lcu, u, u_params, v, v_params, config.effective_weights(),
              config.estimator);
}

double loss_of_unitaries(const DenseMatrix& m, const DenseMatrix& u,
                         const DenseMatrix& v, const std::vector<double>& q) {
  if (m.rows() != m.cols() || u.rows() != m.rows() || v.rows() != m.rows() ||
      u.rows() != u.cols() || v.rows() != v.cols()) {
    throw std::invalid_argument("loss_of_unitaries: square same-size inputs required");
  }
  if (q.empty() || q.size() > m.rows()) {
    throw std::invalid_argument("loss_of_unitaries: bad weight count");
  }
  auto check_unitary = [&](const DenseMatrix& w, const char* name) {
    const DenseMatrix g = w.adjoint() * w;
    double off = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{};
        off += std::norm(g(i, j) - want);
      }
    }
    if (std::sqrt(off) > 1e-8) {
      throw std::invalid_argument(std::string("loss_of_unitaries: ") + name +
                                  " is not unitary");
    }
  };
  check_unitary(u, "U");
  check_unitary(v, "V");

  double total = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const std::vector<cplx> mv = matvec(m, v.column(j));
    cplx z{};
    for (std::size_t i = 0; i < m.rows(); ++i) {
      z += std::conj(u(i, j)) * mv[i];
    }
    total += q[j] * z.real();
  }
  return total;
}

LossGradient gradient(const LcuDecomposition& lcu, const ParamCircuit& u,
                      std::span<const double> u_params, const ParamCircuit& v,
                      std::span<const double> v_params,
                      const std::vector<double>& q,
                      const EstimatorConfig& estimator) {
  if (u_params.size() != u.param_count || v_params.size() != v.param_count) {
    throw std::invalid_argument("gradient: parameter count mismatch");
  }
  LossGradient g;
  g.alpha.resize(u.param_count);
  g.beta.resize(v.param_count);
  if (lcu.terms.empty()) {
    return g;
  }

  if (estimator.mode == EstimatorMode::kExact) {
    const DenseMatrix m = lcu_reconstruct(lcu);
    detail::BilinearEngine engine(m, u, v, q.size());
    return exact_gradient(engine, u_params, v_params, q);
  }

  std::vector<double> a(u_params.begin(), u_params.end());
  std::vector<double> b(v_params.begin(), v_params.end());
  for (std::size_t l = 0; l < a.size(); ++l) {
    a[l] += kPi;
    g.alpha[l] = 0.5 * loss(lcu, u, a, v, b, q, estimator);
    a[l] = u_params[l];
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    b[k] += kPi;
    g.beta[k] = 0.5 * loss(lcu, u, a, v, b, q, estimator);
    b[k] = v_params[k];
  }
  return g;
}

LossGradient gradient(const LcuDecomposition& lcu,
                      std::span<const double> u_params,
                      std::span<const double> v_params,
                      const VqsvdConfig& config) {
  const int n = lcu_qubits(lcu);
  config.validate(lcu.dim);
  const ParamCircuit u = config.u_ansatz.build(n);
  const ParamCircuit v = config.v_ansatz.build(n);
  return gradient(lcu, u, u_params, v, v_params, config.effective_weights(),
                  config.estimator);
}

VqsvdResult run(const LcuDecomposition& lcu, const VqsvdConfig& config) {
  const int n = lcu_qubits(lcu);
  config.validate(lcu.dim);
  const ParamCircuit u = config.u_ansatz.build(n);
  const ParamCircuit v = config.v_ansatz.build(n);
  const std::vector<double> q = config.effective_weights();
  const DenseMatrix m_dense = lcu_reconstruct(lcu);
  detail::BilinearEngine engine(m_dense, u, v, config.rank);
  const bool exact = config.estimator.mode == EstimatorMode::kExact;

  VqsvdResult result;
  result.n_qubits = n;
  result.config = config;
  result.config.weights = q;

  std::mt19937_64 rng(config.seed);
  auto init = [&](std::size_t count) {
    std::vector<double> p(count);
    for (double& x : p) {
      x = 2.0 * kPi * uniform_unit(rng);
    }
    return p;
  };
  std::vector<double> alpha =
      config.init_alpha.empty() ? init(u.param_count) : config.init_alpha;
  std::vector<double> beta =
      config.init_beta.empty() ? init(v.param_count) : config.init_beta;
  if (alpha.size() != u.param_count || beta.size() != v.param_count) {
    throw std::invalid_argument("run: warm-start parameter count mismatch");
  }

  auto eval_loss = [&]() {
    if (exact) {
      return combine(q, engine.elements(alpha, beta));
    }
    return loss(lcu, u, alpha, v, beta, q, config.estimator);
  };

  detail::AdamAscent adam_a(u.param_count, config.learning_rate, config.lr_decay);
  detail::AdamAscent adam_b(v.param_count, config.learning_rate, config.lr_decay);
  bool pending_update = false;
  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    result.loss_history.push_back(eval_loss());
    if (config.record_m_traces) {
      const std::vector<cplx> zs = engine.elements(alpha, beta);
      std::vector<double> trace(config.rank);
      for (std::size_t j = 0; j < config.rank; ++j) trace[j] = zs[j].real();
      result.m_history.push_back(std::move(trace));
    }
    pending_update = false;
    if (detail::window_converged(result.loss_history, config.tolerance)) {
      result.converged = true;
      break;
    }
    const LossGradient g =
        exact ? exact_gradient(engine, alpha, beta, q)
              : gradient(lcu, u, alpha, v, beta, q, config.estimator);
    adam_a.step(alpha, g.alpha);
    adam_b.step(beta, g.beta);
    ++result.iterations;
    pending_update = true;
  }
  if (pending_update) {
    result.loss_history.push_back(eval_loss());
    if (config.record_m_traces) {
      const std::vector<cplx> zs = engine.elements(alpha, beta);
      std::vector<double> trace(config.rank);
      for (std::size_t j = 0; j < config.rank; ++j) trace[j] = zs[j].real();
      result.m_history.push_back(std::move(trace));
    }
  }

  // Reported values are always the exact-mode elements at the optimum.
  const std::vector<cplx> zs = engine.elements(alpha, beta);
  std::vector<std::size_t> order(config.rank);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return zs[x].real() > zs[y].real();
  });
  result.m_values.resize(config.rank);
  result.basis_order = order;
  for (std::size_t j = 0; j < config.rank; ++j) {
    result.m_values[j] = zs[order[j]].real();
    if (result.m_values[j] < 0.0) result.negative_m_present = true;
  }
  result.alpha_star = std::move(alpha);
  result.beta_star = std::move(beta);
  return result;
}

VectorFamilies extract_vectors(const VqsvdResult& result, std::size_t t) {
  if (t > result.basis_order.size()) {
    throw std::invalid_argument("extract_vectors: t exceeds solved rank");
  }
  const ParamCircuit u = result.config.u_ansatz.build(result.n_qubits);
  const ParamCircuit v = result.config.v_ansatz.build(result.n_qubits);
  const DenseMatrix mu = realize_unitary(u, result.alpha_star);
  const DenseMatrix mv = realize_unitary(v, result.beta_star);
  const std::size_t dim = mu.rows();
  VectorFamilies f;
  f.lefts = DenseMatrix(dim, t);
  f.rights = DenseMatrix(dim, t);
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t src = result.basis_order[j];
    for (std::size_t i = 0; i < dim; ++i) {
      f.lefts(i, j) = mu(i, src);
      f.rights(i, j) = mv(i, src);
    }
  }
  return f;
}

}  // namespace vqsvd
