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
#ifndef VQSVD_APPLICATIONS_HPP_
#define VQSVD_APPLICATIONS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vqsvd/solver.hpp"

namespace vqsvd {

/// Grayscale image with pixels normalized to [0, 1], row-major.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> pixels;
};

// PGM (P2 ASCII / P5 binary) with maxval 255.
GrayImage read_pgm_file(const std::string& path);
void write_pgm_file(const std::string& path, const GrayImage& image,
                    bool binary = false);

DenseMatrix image_to_matrix(const GrayImage& image);
GrayImage matrix_to_image(const DenseMatrix& m);  // clamps to [0, 1]

struct CompressionReport {
  std::size_t rank = 0;
  int depth = 0;
  double vqsvd_distance = 0.0;      // ||M_re - M||_F of the rank-T rebuild
  double classical_distance = 0.0;  // Eckart-Young floor at the same rank
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  /// T/(2*side) as reported in the source protocol, and the conventional
  /// storage ratio T(2*side+1)/side^2.
  double naive_compression_ratio = 0.0;
  double storage_compression_ratio = 0.0;
};

struct CompressionResult {
  CompressionReport report;
  GrayImage reconstructed;
};

/// Trains rank-T factors on the image matrix and rebuilds it; pixels of the
/// emitted image are clamped to [0, 1], the reported distance is taken on
/// the rank-T rebuild itself. Non-convergence only flags the report.
CompressionResult compress_image(const GrayImage& image,
                                 const VqsvdConfig& config);

struct RecommendationOutput {
  std::vector<cplx> xi;               // xi_t = <v_t|b>
  double g = 0.0;                     // sqrt(sum |xi_t|^2)
  std::vector<double> probabilities;  // |<item|b_hat>|^2, sums to 1
  std::vector<std::size_t> samples;   // optional seeded measurements
};

/// Projects customer row l onto the span of learned right singular vectors.
RecommendationOutput recommend(const DenseMatrix& a, std::size_t k,
                               const VqsvdConfig& config,
                               std::size_t customer_row, std::size_t samples);

/// Same projection with externally supplied right vectors (columns); used to
/// check against the classical projector and by tests with oracle vectors.
RecommendationOutput recommend_with_vectors(const DenseMatrix& a,
                                            const DenseMatrix& right_vectors,
                                            std::size_t customer_row,
                                            std::size_t samples,
                                            std::uint64_t seed);

struct PolarReport {
  DenseMatrix w;
  DenseMatrix p;
  double unitarity_residual = 0.0;  // ||W^+W - I||_F
  double min_eigenvalue = 0.0;      // min m_j (P = V diag(m) V^+)
  double product_residual = 0.0;    // ||W P - M||_F
};

/// Composes W = U V^+ and P = V D V^+ from supplied full-rank factors.
PolarReport polar_from_factors(const DenseMatrix& m,
                               const std::vector<double>& values,
                               const DenseMatrix& lefts,
                               const DenseMatrix& rights);

/// Full-rank VQSVD then factor composition; refuses config.rank < dim.
PolarReport polar_via_vqsvd(const LcuDecomposition& lcu,
                            const VqsvdConfig& config);

struct BenchmarkRow {
  char candidate = 'a';
  int blocks = 0;
  std::size_t params_per_circuit = 0;
  std::size_t params_total = 0;  // both circuits
  double distance = 0.0;
  bool converged = false;
};

/// The 24-parameter comparison protocol: candidates (a,b,c,d) with blocks
/// (8,3,8,4), T=8, weights (8..1), ITR=200, LR=0.05, a shared seed.
std::vector<BenchmarkRow> benchmark_ansatz(const DenseMatrix& m,
                                           RotationMode mode,
                                           std::uint64_t seed);

}  // namespace vqsvd

#endif  // VQSVD_APPLICATIONS_HPP_
