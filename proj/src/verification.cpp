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
#include "vqsvd/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "train_detail.hpp"
#include "vqsvd/rng.hpp"

namespace vqsvd {

double epsilon_d(const std::vector<double>& exact_d,
                 const std::vector<double>& inferred_m) {
  if (exact_d.size() != inferred_m.size()) {
    throw std::invalid_argument("epsilon_d: length mismatch");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < exact_d.size(); ++j) {
    const double diff = exact_d[j] - inferred_m[j];
    s += diff * diff;
  }
  return s;
}

DenseMatrix h_embedding(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("h_embedding: matrix must be square");
  }
  const std::size_t n = m.rows();
  DenseMatrix h(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, n + j) = m(i, j);
      h(n + i, j) = std::conj(m(j, i));
    }
  }
  return h;
}

double epsilon_v(const DenseMatrix& m, const std::vector<double>& inferred_m,
                 const DenseMatrix& u_hat, const DenseMatrix& v_hat) {
  const std::size_t n = m.rows();
  const std::size_t t = inferred_m.size();
  if (m.rows() != m.cols() || u_hat.rows() != n || v_hat.rows() != n ||
      u_hat.cols() < t || v_hat.cols() < t) {
    throw std::invalid_argument("epsilon_v: dimension mismatch");
  }
  const DenseMatrix h = h_embedding(m);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  double total = 0.0;
  std::vector<cplx> e(2 * n);
  for (std::size_t j = 0; j < t; ++j) {
    for (int sign = 0; sign < 2; ++sign) {
      const double s = sign == 0 ? 1.0 : -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = inv_sqrt2 * u_hat(i, j);
        e[n + i] = s * inv_sqrt2 * v_hat(i, j);
      }
      const std::vector<cplx> he = matvec(h, e);
      // ||H e - (+-m) e||^2; the minus branch checks the -m eigenpair.
      double r = 0.0;
      for (std::size_t i = 0; i < 2 * n; ++i) {
        r += std::norm(he[i] - s * inferred_m[j] * e[i]);
      }
      total += r;
    }
  }
  return total;
}

VqfneResult vqfne_run(const LcuDecomposition& lcu, const VqsvdConfig& config) {
  const int n = lcu.n_qubits();
  if (n < 1) {
    throw std::invalid_argument("vqfne_run: LCU dimension must be a power of two >= 2");
  }
  config.validate(lcu.dim);
  const ParamCircuit u = config.u_ansatz.build(n);
  const ParamCircuit v = config.v_ansatz.build(n);
  const DenseMatrix m_dense = lcu_reconstruct(lcu);
  detail::BilinearEngine engine(m_dense, u, v, config.rank);
  const bool exact = config.estimator.mode == EstimatorMode::kExact;
  constexpr double kPi = std::numbers::pi;

  std::mt19937_64 rng(config.seed);
  auto init = [&](std::size_t count) {
    std::vector<double> p(count);
    for (double& x : p) x = 2.0 * kPi * uniform_unit(rng);
    return p;
  };
  std::vector<double> alpha =
      config.init_alpha.empty() ? init(u.param_count) : config.init_alpha;
  std::vector<double> beta =
      config.init_beta.empty() ? init(v.param_count) : config.init_beta;
  if (alpha.size() != u.param_count || beta.size() != v.param_count) {
    throw std::invalid_argument("vqfne_run: warm-start parameter count mismatch");
  }

  auto elements = [&](std::span<const double> a, std::span<const double> b) {
    if (exact) return engine.elements(a, b);
    std::vector<cplx> zs(config.rank);
    for (std::size_t j = 0; j < config.rank; ++j) {
      zs[j] = matrix_element_complex(lcu, u, a, v, b, j, config.estimator);
    }
    return zs;
  };
  auto f_of = [](const std::vector<cplx>& zs) {
    double f = 0.0;
    for (const cplx& z : zs) f += std::norm(z);
    return f;
  };

  VqfneResult result;
  detail::AdamAscent adam_a(u.param_count, config.learning_rate, config.lr_decay);
  detail::AdamAscent adam_b(v.param_count, config.learning_rate, config.lr_decay);
  bool pending_update = false;
  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    const std::vector<cplx> zs = elements(alpha, beta);
    result.loss_history.push_back(f_of(zs));
    pending_update = false;
    if (detail::window_converged(result.loss_history, config.tolerance)) {
      result.converged = true;
      break;
    }
    // dF/dtheta = sum_j 2 Re[conj(z_j) dz_j/dtheta] with dz_j/dtheta equal to
    // half the pi-shifted element, so each component is
    // sum_j Re[conj(z_j) z_j(theta + pi)].
    std::vector<double> ga(u.param_count), gb(v.param_count);
    if (exact) {
      engine.prepare_beta(beta);
      std::vector<double> shifted(alpha);
      for (std::size_t l = 0; l < u.param_count; ++l) {
        shifted[l] += kPi;
        const std::vector<cplx> zshift = engine.elements_cached_beta(shifted);
        shifted[l] = alpha[l];
        double g = 0.0;
        for (std::size_t j = 0; j < config.rank; ++j) {
          g += (std::conj(zs[j]) * zshift[j]).real();
        }
        ga[l] = g;
      }
      engine.prepare_alpha(alpha);
      shifted.assign(beta.begin(), beta.end());
      for (std::size_t k = 0; k < v.param_count; ++k) {
        shifted[k] += kPi;
        const std::vector<cplx> zshift = engine.elements_cached_alpha(shifted);
        shifted[k] = beta[k];
        double g = 0.0;
        for (std::size_t j = 0; j < config.rank; ++j) {
          g += (std::conj(zs[j]) * zshift[j]).real();
        }
        gb[k] = g;
      }
    } else {
      std::vector<double> a(alpha), b(beta);
      for (std::size_t l = 0; l < a.size(); ++l) {
        a[l] += kPi;
        const std::vector<cplx> zshift = elements(a, b);
        a[l] = alpha[l];
        double g = 0.0;
        for (std::size_t j = 0; j < config.rank; ++j) {
          g += (std::conj(zs[j]) * zshift[j]).real();
        }
        ga[l] = g;
      }
      for (std::size_t k = 0; k < b.size(); ++k) {
        b[k] += kPi;
        const std::vector<cplx> zshift = elements(a, b);
        b[k] = beta[k];
        double g = 0.0;
        for (std::size_t j = 0; j < config.rank; ++j) {
          g += (std::conj(zs[j]) * zshift[j]).real();
        }
        gb[k] = g;
      }
    }
    adam_a.step(alpha, ga);
    adam_b.step(beta, gb);
    ++result.iterations;
    pending_update = true;
  }
  if (pending_update) {
    result.loss_history.push_back(f_of(elements(alpha, beta)));
  }
  result.f_value = f_of(engine.elements(alpha, beta));
  result.alpha_star = std::move(alpha);
  result.beta_star = std::move(beta);
  return result;
}

MajorizationReport majorization_check(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("majorization_check: matrix must be square");
  }
  const std::size_t n = m.rows();
  const SvdTriple svd = classical_svd(m);
  std::vector<double> diag_sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag_sq[i] = std::norm(m(i, i));
  }
  std::sort(diag_sq.begin(), diag_sq.end(), std::greater<>());

  MajorizationReport report;
  report.margins.resize(n);
  double sum_d = 0.0, sum_diag = 0.0;
  bool all_ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    sum_d += svd.singular_values[k] * svd.singular_values[k];
    sum_diag += diag_sq[k];
    report.margins[k] = sum_d - sum_diag;
    if (report.margins[k] < -1e-10) all_ok = false;
  }
  report.ok = all_ok;
  const bool margins_zero = std::all_of(
      report.margins.begin(), report.margins.end(),
      [](double v) { return std::abs(v) < 1e-12; });
  if (margins_zero) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += std::norm(m(i, j));
      }
    }
    report.diagonal_equality = off < 1e-20;
  }
  return report;
}

std::pair<double, double> distance_equality_check(const DenseMatrix& u,
                                                  const DenseMatrix& v,
                                                  const DenseMatrix& u_hat,
                                                  const DenseMatrix& v_hat) {
  const std::size_t n = u.rows();
  const std::size_t t = u.cols();
  if (v.rows() != n || u_hat.rows() != n || v_hat.rows() != n ||
      v.cols() != t || u_hat.cols() != t || v_hat.cols() != t) {
    throw std::invalid_argument("distance_equality_check: shape mismatch");
  }
  auto col_norm = [&](const DenseMatrix& m, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::norm(m(i, j));
    return std::sqrt(s);
  };
  for (std::size_t j = 0; j < t; ++j) {
    for (const DenseMatrix* fam : {&u, &v, &u_hat, &v_hat}) {
      if (std::abs(col_norm(*fam, j) - 1.0) > 1e-8) {
        throw std::invalid_argument("distance_equality_check: vectors must be unit");
      }
    }
  }

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  auto embed = [&](const DenseMatrix& us, const DenseMatrix& vs, std::size_t j,
                   double sign) {
    std::vector<cplx> e(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = inv_sqrt2 * us(i, j);
      e[n + i] = sign * inv_sqrt2 * vs(i, j);
    }
    return e;
  };
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      lhs += std::norm(u(i, j) - u_hat(i, j));
      lhs += std::norm(v(i, j) - v_hat(i, j));
    }
    for (double sign : {1.0, -1.0}) {
      const std::vector<cplx> e = embed(u, v, j, sign);
      const std::vector<cplx> e_hat = embed(u_hat, v_hat, j, sign);
      for (std::size_t i = 0; i < 2 * n; ++i) {
        rhs += std::norm(e[i] - e_hat[i]);
      }
    }
  }
  if (std::abs(lhs - rhs) >= 1e-10) {
    throw std::logic_error("distance_equality_check: identity violated");
  }
  return {lhs, rhs};
}

QualityReport assess_quality(const DenseMatrix& m, const VqsvdResult& result,
                             const std::optional<VqfneResult>& vqfne) {
  const std::size_t t = result.m_values.size();
  const SvdTriple svd = classical_svd(m);
  std::vector<double> d(svd.singular_values.begin(),
                        svd.singular_values.begin() + static_cast<std::ptrdiff_t>(t));

  QualityReport report;
  report.epsilon_d = epsilon_d(d, result.m_values);
  const VectorFamilies fam = extract_vectors(result, t);
  report.epsilon_v = epsilon_v(m, result.m_values, fam.lefts, fam.rights);

  double oracle_mass = 0.0;
  for (double dj : d) oracle_mass += dj * dj;
  double mass = oracle_mass;
  if (vqfne.has_value()) {
    mass = vqfne->f_value;
    report.vqfne_value = vqfne->f_value;
    report.vqfne_used = true;
    report.bound_source = "vqfne";
  } else {
    report.bound_source = "oracle";
  }
  double m_sq = 0.0;
  for (double mj : result.m_values) m_sq += mj * mj;
  report.bound_common = mass - m_sq;
  report.bound_d = report.bound_common;
  report.bound_v = 2.0 * report.bound_common;
  report.bound_common_oracle = oracle_mass - m_sq;
  MajorizationReport major = majorization_check(m);
  report.majorization_ok = major.ok;
  report.majorization_margins = std::move(major.margins);
  report.bounds_hold =
      report.epsilon_d <= report.bound_common_oracle + 1e-8 &&
      report.epsilon_v <= 2.0 * report.bound_common_oracle + 1e-8;
  return report;
}

void write_quality_report(std::ostream& out, const QualityReport& report) {
  out << "epsilon_d = " << format_g17(report.epsilon_d) << '\n'
      << "epsilon_v = " << format_g17(report.epsilon_v) << '\n'
      << "bound_common = " << format_g17(report.bound_common) << '\n'
      << "bound_d = " << format_g17(report.bound_d) << '\n'
      << "bound_v = " << format_g17(report.bound_v) << '\n'
      << "bound_common_oracle = " << format_g17(report.bound_common_oracle) << '\n'
      << "bound_source = " << report.bound_source << '\n'
      << "vqfne_value = " << format_g17(report.vqfne_value) << '\n'
      << "vqfne_used = " << (report.vqfne_used ? "true" : "false") << '\n'
      << "majorization_ok = " << (report.majorization_ok ? "true" : "false") << '\n';
  out << "majorization_margins =";
  for (double margin : report.majorization_margins) {
    out << ' ' << format_g17(margin);
  }
  out << '\n'
      << "bounds_hold = " << (report.bounds_hold ? "true" : "false") << '\n';
}

}  // namespace vqsvd
