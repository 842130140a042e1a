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
#ifndef VQSVD_SRC_TRAIN_DETAIL_HPP_
#define VQSVD_SRC_TRAIN_DETAIL_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "vqsvd/circuit.hpp"
#include "vqsvd/kernels/kernels.hpp"
#include "vqsvd/linalg.hpp"

namespace vqsvd::detail {

// Exact-mode evaluation of the bilinear forms z_j = <psi_j|U(a)^+ M V(b)|psi_j>
// shared by the weighted-loss solver and the Frobenius-mass verifier. The
// parameter-shift sweeps reuse the fixed side: while alpha parameters shift,
// the w_j = M V(b)|psi_j> states are cached, and symmetrically for beta.
class BilinearEngine {
 public:
  BilinearEngine(const DenseMatrix& m, const ParamCircuit& u,
                 const ParamCircuit& v, std::size_t t)
      : m_(&m), u_(&u), v_(&v), t_(t),
        dim_(std::size_t{1} << u.n_qubits), m_adj_(m.adjoint()) {}

  std::size_t dim() const { return dim_; }

  std::vector<cplx> elements(std::span<const double> a,
                             std::span<const double> b) const {
    std::vector<cplx> out(t_);
    std::vector<cplx> u_state(dim_), v_state(dim_);
    const auto& kern = kernels::active_kernels();
    for (std::size_t j = 0; j < t_; ++j) {
      basis_apply(*v_, b, j, v_state);
      const std::vector<cplx> w = matvec(*m_, v_state);
      basis_apply(*u_, a, j, u_state);
      out[j] = kern.cdot(u_state.data(), w.data(), dim_);
    }
    return out;
  }

  void prepare_beta(std::span<const double> b) {
    cached_w_.assign(t_, std::vector<cplx>(dim_));
    std::vector<cplx> v_state(dim_);
    for (std::size_t j = 0; j < t_; ++j) {
      basis_apply(*v_, b, j, v_state);
      cached_w_[j] = matvec(*m_, v_state);
    }
  }

  // z_j with the cached beta side; only U is re-applied.
  std::vector<cplx> elements_cached_beta(std::span<const double> a) const {
    std::vector<cplx> out(t_);
    std::vector<cplx> u_state(dim_);
    const auto& kern = kernels::active_kernels();
    for (std::size_t j = 0; j < t_; ++j) {
      basis_apply(*u_, a, j, u_state);
      out[j] = kern.cdot(u_state.data(), cached_w_[j].data(), dim_);
    }
    return out;
  }

  void prepare_alpha(std::span<const double> a) {
    cached_y_.assign(t_, std::vector<cplx>(dim_));
    std::vector<cplx> u_state(dim_);
    for (std::size_t j = 0; j < t_; ++j) {
      basis_apply(*u_, a, j, u_state);
      cached_y_[j] = matvec(m_adj_, u_state);
    }
  }

  // z_j = <M^+ u_j | v_j> with the cached alpha side.
  std::vector<cplx> elements_cached_alpha(std::span<const double> b) const {
    std::vector<cplx> out(t_);
    std::vector<cplx> v_state(dim_);
    const auto& kern = kernels::active_kernels();
    for (std::size_t j = 0; j < t_; ++j) {
      basis_apply(*v_, b, j, v_state);
      out[j] = kern.cdot(cached_y_[j].data(), v_state.data(), dim_);
    }
    return out;
  }

 private:
  static void basis_apply(const ParamCircuit& c, std::span<const double> p,
                          std::size_t j, std::vector<cplx>& state) {
    std::fill(state.begin(), state.end(), cplx{});
    state[j] = 1.0;
    apply_circuit_inplace(c, p, state);
  }

  const DenseMatrix* m_;
  const ParamCircuit* u_;
  const ParamCircuit* v_;
  std::size_t t_;
  std::size_t dim_;
  DenseMatrix m_adj_;
  std::vector<std::vector<cplx>> cached_w_;
  std::vector<std::vector<cplx>> cached_y_;
};

// Adam in ascent form (signs folded from the usual minimizer applied to -L).
// An optional inverse-time decay tightens the late-stage oscillation.
class AdamAscent {
 public:
  explicit AdamAscent(std::size_t n, double lr, double lr_decay = 0.0,
                      double beta1 = 0.9, double beta2 = 0.999,
                      double eps = 1e-8)
      : lr_(lr), lr_decay_(lr_decay), beta1_(beta1), beta2_(beta2), eps_(eps),
        m_(n, 0.0), v_(n, 0.0) {}

  void step(std::vector<double>& params, const std::vector<double>& grad) {
    ++t_;
    const double lr =
        lr_ / (1.0 + lr_decay_ * static_cast<double>(t_ - 1));
    const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
      m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
      v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
      params[i] += lr * (m_[i] / bc1) / (std::sqrt(v_[i] / bc2) + eps_);
    }
  }

 private:
  double lr_, lr_decay_, beta1_, beta2_, eps_;
  std::vector<double> m_, v_;
  std::size_t t_ = 0;
};

// |dL| < eps over a sliding 10-iteration window, read as max-min of the last
// 10 recorded losses.
inline bool window_converged(const std::vector<double>& history,
                             double tolerance) {
  constexpr std::size_t kWindow = 10;
  if (tolerance <= 0.0 || history.size() < kWindow) return false;
  double lo = history[history.size() - kWindow];
  double hi = lo;
  for (std::size_t i = history.size() - kWindow + 1; i < history.size(); ++i) {
    lo = std::min(lo, history[i]);
    hi = std::max(hi, history[i]);
  }
  return hi - lo < tolerance;
}

}  // namespace vqsvd::detail

#endif  // VQSVD_SRC_TRAIN_DETAIL_HPP_
