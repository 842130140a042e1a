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
#include "vqsvd/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vqsvd/kernels/kernels.hpp"
#include "vqsvd/rng.hpp"

namespace vqsvd {

void EstimatorConfig::validate() const {
  if (mode == EstimatorMode::kShots && shots_per_term < 1) {
    throw std::invalid_argument("EstimatorConfig: shots mode needs shots_per_term >= 1");
  }
  if (mode == EstimatorMode::kSampledTerms && term_samples < 1) {
    throw std::invalid_argument("EstimatorConfig: sampled mode needs term_samples >= 1");
  }
}

std::pair<double, double> exact_re_im(const StateVector& psi,
                                      const StateVector& w_applied) {
  if (psi.dim() != w_applied.dim()) {
    throw std::invalid_argument("exact_re_im: dimension mismatch");
  }
  const cplx v = kernels::active_kernels().cdot(
      psi.amplitudes.data(), w_applied.amplitudes.data(), psi.dim());
  return {v.real(), v.imag()};
}

namespace {

// (#0 - #1)/shots for Bernoulli p0; the +-1 coding of the ancilla outcome.
double sample_pm1_mean(double p0, std::size_t shots, std::mt19937_64& rng) {
  p0 = std::clamp(p0, 0.0, 1.0);
  std::size_t zeros = 0;
  for (std::size_t s = 0; s < shots; ++s) {
    if (uniform_unit(rng) < p0) ++zeros;
  }
  return (2.0 * static_cast<double>(zeros) - static_cast<double>(shots)) /
         static_cast<double>(shots);
}

std::pair<double, double> bra_w_ket(const StateVector& psi,
                                    const DenseMatrix& w) {
  if (w.rows() != psi.dim() || w.cols() != psi.dim()) {
    throw std::invalid_argument("hadamard test: unitary dimension mismatch");
  }
  StateVector applied;
  applied.n_qubits = psi.n_qubits;
  applied.amplitudes = matvec(w, psi.amplitudes);
  return exact_re_im(psi, applied);
}

}  // namespace

double hadamard_test_re(const StateVector& psi, const DenseMatrix& w,
                        std::size_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("hadamard_test_re: shots must be >= 1");
  }
  const double re = bra_w_ket(psi, w).first;
  std::mt19937_64 rng(seed);
  return sample_pm1_mean(0.5 * (1.0 + re), shots, rng);
}

double hadamard_test_im(const StateVector& psi, const DenseMatrix& w,
                        std::size_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("hadamard_test_im: shots must be >= 1");
  }
  const double im = bra_w_ket(psi, w).second;
  std::mt19937_64 rng(seed);
  return sample_pm1_mean(0.5 * (1.0 + im), shots, rng);
}

double matrix_element(const LcuDecomposition& lcu, const ParamCircuit& u,
                      std::span<const double> alpha, const ParamCircuit& v,
                      std::span<const double> beta, std::size_t basis_j,
                      const EstimatorConfig& config) {
  config.validate();
  if (lcu.terms.empty()) {
    throw std::invalid_argument("matrix_element: empty LCU");
  }
  if (u.n_qubits != v.n_qubits) {
    throw std::invalid_argument("matrix_element: circuit qubit counts differ");
  }
  const std::size_t dim = std::size_t{1} << u.n_qubits;
  if (dim != lcu.dim) {
    throw std::invalid_argument("matrix_element: LCU/circuit dimension mismatch");
  }
  if (basis_j >= dim) {
    throw std::invalid_argument("matrix_element: basis index out of range");
  }

  const StateVector psi = StateVector::basis(u.n_qubits, basis_j);
  const StateVector u_state = apply_circuit(u, alpha, psi);
  const StateVector v_state = apply_circuit(v, beta, psi);
  const auto& kern = kernels::active_kernels();

  std::vector<cplx> term_applied(dim);
  auto term_overlap = [&](const LcuTerm& t) {  // <u| A_k |v>
    apply_term(t, v_state.amplitudes, term_applied);
    return kern.cdot(u_state.amplitudes.data(), term_applied.data(), dim);
  };

  switch (config.mode) {
    case EstimatorMode::kExact: {
      std::vector<cplx> accum(dim);
      for (const LcuTerm& t : lcu.terms) {
        apply_term(t, v_state.amplitudes, term_applied);
        kern.axpy(accum.data(), term_applied.data(), dim, t.coeff);
      }
      return kern.cdot(u_state.amplitudes.data(), accum.data(), dim).real();
    }
    case EstimatorMode::kShots: {
      std::mt19937_64 rng(mix_seed(config.seed, basis_j));
      double total = 0.0;
      for (const LcuTerm& t : lcu.terms) {
        const cplx z = term_overlap(t);
        const double re_k =
            sample_pm1_mean(0.5 * (1.0 + z.real()), config.shots_per_term, rng);
        double im_k = 0.0;
        if (t.coeff.imag() != 0.0) {
          im_k = sample_pm1_mean(0.5 * (1.0 + z.imag()),
                                 config.shots_per_term, rng);
        }
        total += t.coeff.real() * re_k - t.coeff.imag() * im_k;
      }
      return total;
    }
    case EstimatorMode::kSampledTerms: {
      if (lcu.l1_norm <= 0.0) {
        throw std::invalid_argument("matrix_element: sampled mode needs l1 > 0");
      }
      const std::uint64_t base = mix_seed(config.seed, basis_j);
      const auto indices =
          importance_sample_terms(lcu, config.term_samples, base);
      std::mt19937_64 rng(mix_seed(base, 0x7e57ULL));
      double total = 0.0;
      for (std::size_t k : indices) {
        const LcuTerm& t = lcu.terms[k];
        const cplx phase = t.coeff / std::abs(t.coeff);
        const double signed_re = (phase * term_overlap(t)).real();
        double value = signed_re;
        if (config.shots_per_term >= 1) {
          value = sample_pm1_mean(0.5 * (1.0 + signed_re),
                                  config.shots_per_term, rng);
        }
        total += lcu.l1_norm * value;
      }
      return total / static_cast<double>(indices.size());
    }
  }
  throw std::logic_error("matrix_element: unreachable");
}

cplx matrix_element_complex(const LcuDecomposition& lcu, const ParamCircuit& u,
                            std::span<const double> alpha,
                            const ParamCircuit& v, std::span<const double> beta,
                            std::size_t basis_j, const EstimatorConfig& config) {
  config.validate();
  if (lcu.terms.empty()) {
    throw std::invalid_argument("matrix_element_complex: empty LCU");
  }
  const std::size_t dim = std::size_t{1} << u.n_qubits;
  if (dim != lcu.dim || u.n_qubits != v.n_qubits) {
    throw std::invalid_argument("matrix_element_complex: dimension mismatch");
  }
  if (basis_j >= dim) {
    throw std::invalid_argument("matrix_element_complex: basis index out of range");
  }
  const StateVector psi = StateVector::basis(u.n_qubits, basis_j);
  const StateVector u_state = apply_circuit(u, alpha, psi);
  const StateVector v_state = apply_circuit(v, beta, psi);
  const auto& kern = kernels::active_kernels();

  std::vector<cplx> term_applied(dim);
  auto term_overlap = [&](const LcuTerm& t) {
    apply_term(t, v_state.amplitudes, term_applied);
    return kern.cdot(u_state.amplitudes.data(), term_applied.data(), dim);
  };

  switch (config.mode) {
    case EstimatorMode::kExact: {
      cplx total{};
      for (const LcuTerm& t : lcu.terms) {
        total += t.coeff * term_overlap(t);
      }
      return total;
    }
    case EstimatorMode::kShots: {
      std::mt19937_64 rng(mix_seed(config.seed, basis_j));
      cplx total{};
      for (const LcuTerm& t : lcu.terms) {
        const cplx z = term_overlap(t);
        const double re_k =
            sample_pm1_mean(0.5 * (1.0 + z.real()), config.shots_per_term, rng);
        const double im_k =
            sample_pm1_mean(0.5 * (1.0 + z.imag()), config.shots_per_term, rng);
        total += t.coeff * cplx{re_k, im_k};
      }
      return total;
    }
    case EstimatorMode::kSampledTerms: {
      if (lcu.l1_norm <= 0.0) {
        throw std::invalid_argument(
            "matrix_element_complex: sampled mode needs l1 > 0");
      }
      const std::uint64_t base = mix_seed(config.seed, basis_j);
      const auto indices =
          importance_sample_terms(lcu, config.term_samples, base);
      std::mt19937_64 rng(mix_seed(base, 0x7e57ULL));
      cplx total{};
      for (std::size_t k : indices) {
        const LcuTerm& t = lcu.terms[k];
        const cplx phase = t.coeff / std::abs(t.coeff);
        cplx value = phase * term_overlap(t);
        if (config.shots_per_term >= 1) {
          const double re = sample_pm1_mean(0.5 * (1.0 + value.real()),
                                            config.shots_per_term, rng);
          const double im = sample_pm1_mean(0.5 * (1.0 + value.imag()),
                                            config.shots_per_term, rng);
          value = {re, im};
        }
        total += lcu.l1_norm * value;
      }
      return total / static_cast<double>(indices.size());
    }
  }
  throw std::logic_error("matrix_element_complex: unreachable");
}

}  // namespace vqsvd
