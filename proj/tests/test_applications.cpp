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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "test_util.hpp"
#include "vqsvd/applications.hpp"
#include "vqsvd/verification.hpp"

using namespace vqsvd;
using namespace vqsvd::testutil;

namespace {

const char* kFixtures = VQSVD_FIXTURES_DIR;

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("PGM io") {
  SUBCASE("fixture digit loads with the right geometry") {
    const GrayImage img =
        read_pgm_file(std::string(kFixtures) + "/digit7.pgm");
    CHECK(img.width == 32);
    CHECK(img.height == 32);
    double maxp = 0.0;
    for (double p : img.pixels) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      maxp = std::max(maxp, p);
    }
    CHECK(maxp == 1.0);
  }
  SUBCASE("ascii and binary writers round-trip at 8-bit precision") {
    GrayImage img;
    img.width = 5;
    img.height = 3;
    img.pixels.resize(15);
    std::mt19937_64 rng(1);
    for (double& p : img.pixels) p = uniform_unit(rng);

    for (bool binary : {false, true}) {
      const auto path = temp_file(binary ? "t_img.p5.pgm" : "t_img.p2.pgm");
      write_pgm_file(path.string(), img, binary);
      const GrayImage back = read_pgm_file(path.string());
      REQUIRE(back.width == img.width);
      REQUIRE(back.height == img.height);
      for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        CHECK(std::abs(back.pixels[i] - img.pixels[i]) <= 0.5 / 255.0 + 1e-12);
      }
      std::filesystem::remove(path);
    }
  }
  SUBCASE("bad files are rejected") {
    const auto path = temp_file("t_img_bad.pgm");
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    std::fputs("P3\n2 2\n255\n", f);
    std::fclose(f);
    CHECK_THROWS_AS(read_pgm_file(path.string()), std::runtime_error);
    std::filesystem::remove(path);
  }
}

TEST_CASE("compress_image on a constant image is exact at rank 1") {
  GrayImage img;
  img.width = 4;
  img.height = 4;
  img.pixels.assign(16, 0.75);
  VqsvdConfig cfg;
  cfg.rank = 1;
  cfg.u_ansatz.depth = 8;
  cfg.v_ansatz.depth = 8;
  cfg.max_iterations = 300;
  cfg.tolerance = 1e-9;
  cfg.seed = 2;
  const CompressionResult res = compress_image(img, cfg);
  CHECK(res.report.classical_distance < 1e-12);
  CHECK(res.report.vqsvd_distance < 1e-2);
  CHECK(res.report.vqsvd_distance >= res.report.classical_distance - 1e-9);
  for (double p : res.reconstructed.pixels) {
    CHECK(p == doctest::Approx(0.75).epsilon(2e-2));
  }
}

TEST_CASE("compression report invariants on the digit fixture") {
  const GrayImage img = read_pgm_file(std::string(kFixtures) + "/digit7.pgm");
  VqsvdConfig cfg;
  cfg.rank = 5;
  cfg.u_ansatz.depth = 20;
  cfg.v_ansatz.depth = 20;
  cfg.max_iterations = 60;  // a short run still obeys the floor
  cfg.tolerance = 0.0;
  cfg.seed = 3;
  const CompressionResult res = compress_image(img, cfg);
  CHECK(res.report.vqsvd_distance >= res.report.classical_distance - 1e-9);
  CHECK(res.report.rank == 5);
  CHECK(res.report.depth == 20);
  // 7.81% bookkeeping: T/(2*side) for T=5, side=32.
  CHECK(res.report.naive_compression_ratio ==
        doctest::Approx(5.0 / 64.0).epsilon(1e-12));
  CHECK(res.report.storage_compression_ratio ==
        doctest::Approx(5.0 * 65.0 / 1024.0).epsilon(1e-12));
  for (double p : res.reconstructed.pixels) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("compress_image rejects bad inputs") {
  GrayImage img;
  img.width = 3;
  img.height = 3;
  img.pixels.assign(9, 0.5);
  VqsvdConfig cfg;
  cfg.rank = 1;
  CHECK_THROWS_AS(compress_image(img, cfg), std::invalid_argument);
  img.width = img.height = 4;
  img.pixels.assign(16, 1.5);
  CHECK_THROWS_AS(compress_image(img, cfg), std::invalid_argument);
}

TEST_CASE("recommendation with explicit vectors") {
  SUBCASE("diagonal preferences keep the basis") {
    const DenseMatrix a = diag({3.0, 2.0, 1.0, 0.5});
    const SvdTriple t = classical_svd(a);
    DenseMatrix top1(4, 1);
    top1.set_column(0, t.right_vectors.column(0));
    const RecommendationOutput out = recommend_with_vectors(a, top1, 0, 0, 1);
    CHECK(std::abs(out.xi[0] - cplx{1.0, 0.0}) < 1e-12);
    CHECK(out.g == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(out.probabilities[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("rank-1 outer product projects onto v") {
    std::mt19937_64 rng(4);
    const std::vector<cplx> u = random_unit_vector(5, rng);
    const std::vector<cplx> v = random_unit_vector(5, rng);
    DenseMatrix a(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        a(i, j) = 2.0 * u[i] * std::conj(v[j]);
      }
    }
    const SvdTriple t = classical_svd(a);
    DenseMatrix top1(5, 1);
    top1.set_column(0, t.right_vectors.column(0));
    const RecommendationOutput out = recommend_with_vectors(a, top1, 2, 0, 1);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(out.probabilities[i] == doctest::Approx(std::norm(v[i])).epsilon(1e-8));
    }
  }
  SUBCASE("oracle vectors equal the classical projector on 50 random matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 4 + (trial % 3) * 2;
      const std::size_t k = 1 + trial % 3;
      const DenseMatrix a = random_real_matrix(n, n, rng);
      const SvdTriple t = classical_svd(a);
      DenseMatrix rights(n, k);
      for (std::size_t j = 0; j < k; ++j) {
        rights.set_column(j, t.right_vectors.column(j));
      }
      const std::size_t row = rng() % n;
      const RecommendationOutput out =
          recommend_with_vectors(a, rights, row, 0, 1);

      // Classical route: Pi b / ||Pi b|| with Pi = sum |v_t><v_t|.
      std::vector<cplx> b(n);
      double bn = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        b[j] = a(row, j);
        bn += std::norm(b[j]);
      }
      bn = std::sqrt(bn);
      for (cplx& x : b) x /= bn;
      std::vector<cplx> pb(n);
      for (std::size_t t2 = 0; t2 < k; ++t2) {
        cplx overlap{};
        for (std::size_t i = 0; i < n; ++i) {
          overlap += std::conj(rights(i, t2)) * b[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
          pb[i] += overlap * rights(i, t2);
        }
      }
      double pn = 0.0;
      for (const cplx& x : pb) pn += std::norm(x);
      pn = std::sqrt(pn);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(out.probabilities[i] - std::norm(pb[i] / pn)) < 1e-8);
      }
    }
  }
  SUBCASE("probabilities sum to one and sampling is deterministic") {
    std::mt19937_64 rng(6);
    const DenseMatrix a = random_real_matrix(8, 8, rng);
    const SvdTriple t = classical_svd(a);
    DenseMatrix rights(8, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      rights.set_column(j, t.right_vectors.column(j));
    }
    const RecommendationOutput o1 = recommend_with_vectors(a, rights, 1, 50, 9);
    const RecommendationOutput o2 = recommend_with_vectors(a, rights, 1, 50, 9);
    CHECK(o1.samples == o2.samples);
    CHECK(o1.samples.size() == 50);
    double sum = 0.0;
    for (double p : o1.probabilities) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(o1.g == doctest::Approx(std::sqrt(
                      std::norm(o1.xi[0]) + std::norm(o1.xi[1]) +
                      std::norm(o1.xi[2]))).epsilon(1e-10));
  }
  SUBCASE("zero customer row is rejected") {
    DenseMatrix a(4, 4);
    a(0, 0) = 1.0;
    const DenseMatrix id = DenseMatrix::identity(4);
    CHECK_THROWS_AS(recommend_with_vectors(a, id, 2, 0, 1),
                    std::invalid_argument);
  }
  SUBCASE("row orthogonal to the subspace is a degenerate output") {
    DenseMatrix a = diag({2.0, 1.0});
    DenseMatrix rights(2, 1);
    rights(0, 0) = 1.0;  // span{e_0}, but row 1 of A is along e_1
    CHECK_THROWS_AS(recommend_with_vectors(a, rights, 1, 0, 1),
                    std::runtime_error);
  }
}

TEST_CASE("recommend end-to-end on a diagonal matrix") {
  const DenseMatrix a = diag({3.0, 2.0, 1.0, 0.5});
  VqsvdConfig cfg;
  cfg.u_ansatz.depth = 12;
  cfg.v_ansatz.depth = 12;
  cfg.max_iterations = 300;
  cfg.tolerance = 1e-8;
  cfg.seed = 21;
  const RecommendationOutput out = recommend(a, 2, cfg, 0, 0);
  // Row 0 = 3 e_0 lies in the learned top-2 span, so b_hat ~ e_0.
  CHECK(out.probabilities[0] > 0.99);
}

TEST_CASE("polar composition") {
  SUBCASE("identity factors") {
    const DenseMatrix id = DenseMatrix::identity(3);
    const SvdTriple t = classical_svd(id);
    const PolarReport r =
        polar_from_factors(id, t.singular_values, t.left_vectors, t.right_vectors);
    CHECK(max_abs_diff(r.w, id) < 1e-12);
    CHECK(max_abs_diff(r.p, id) < 1e-12);
    CHECK(r.product_residual < 1e-12);
  }
  SUBCASE("diag(3,2) with exact factors gives (I, diag)") {
    const DenseMatrix m = diag({3.0, 2.0});
    const SvdTriple t = classical_svd(m);
    const PolarReport r =
        polar_from_factors(m, t.singular_values, t.left_vectors, t.right_vectors);
    CHECK(max_abs_diff(r.w, DenseMatrix::identity(2)) < 1e-10);
    CHECK(max_abs_diff(r.p, m) < 1e-10);
  }
  SUBCASE("scaled rotation via the solver matches the oracle") {
    DenseMatrix m(2, 2);
    m(0, 1) = -2.0;
    m(1, 0) = 2.0;
    // 2x2 is one qubit; embed in a 4x4 block to use the standard ansatz.
    DenseMatrix big(4, 4);
    big(0, 1) = -2.0;
    big(1, 0) = 2.0;
    big(2, 2) = 1.0;
    big(3, 3) = 1.0;
    VqsvdConfig cfg;
    cfg.rank = 4;
    cfg.u_ansatz.depth = 20;
    cfg.v_ansatz.depth = 20;
    cfg.max_iterations = 800;
    cfg.tolerance = 1e-9;
    cfg.seed = 6;
    const PolarReport r = polar_via_vqsvd(pauli_decompose(big), cfg);
    const PolarFactors oracle = polar_decompose(big);
    CHECK(r.unitarity_residual < 1e-6);
    CHECK(r.min_eigenvalue > -1e-6);
    CHECK(r.product_residual < 1e-4 * frobenius_norm(big));
    CHECK(max_abs_diff(r.w, oracle.w) < 1e-5);
    CHECK(max_abs_diff(r.p, oracle.p) < 1e-5);
  }
  SUBCASE("partial rank is refused") {
    VqsvdConfig cfg;
    cfg.rank = 2;
    CHECK_THROWS_AS(
        polar_via_vqsvd(pauli_decompose(diag({1.0, 1.0, 1.0, 1.0})), cfg),
        std::invalid_argument);
  }
}

TEST_CASE("benchmark_ansatz") {
  SUBCASE("zero matrix gives four zero distances") {
    const auto rows = benchmark_ansatz(DenseMatrix(8, 8), RotationMode::kReal, 1);
    REQUIRE(rows.size() == 4);
    for (const BenchmarkRow& r : rows) {
      CHECK(r.distance == 0.0);
      CHECK(r.params_per_circuit == 24);
    }
  }
  SUBCASE("deterministic given a seed and sane on a random matrix") {
    std::mt19937_64 rng(31);
    const DenseMatrix m = random_real_matrix(8, 8, rng);
    const auto rows1 = benchmark_ansatz(m, RotationMode::kReal, 77);
    const auto rows2 = benchmark_ansatz(m, RotationMode::kReal, 77);
    REQUIRE(rows1.size() == 4);
    const int want_blocks[4] = {8, 3, 8, 4};
    for (int i = 0; i < 4; ++i) {
      CHECK(rows1[i].distance == rows2[i].distance);
      CHECK(rows1[i].blocks == want_blocks[i]);
      CHECK(rows1[i].params_per_circuit == 24);
      CHECK(rows1[i].params_total == 48);
      CHECK(rows1[i].distance >= 0.0);
      CHECK(rows1[i].distance < frobenius_norm(m));
    }
  }
  SUBCASE("complex mode triples the per-circuit parameters") {
    std::mt19937_64 rng(32);
    const DenseMatrix m = random_complex_matrix(8, 8, rng);
    const auto rows = benchmark_ansatz(m, RotationMode::kComplex, 5);
    for (const BenchmarkRow& r : rows) {
      CHECK(r.params_per_circuit == 72);
      CHECK(r.params_total == 144);
    }
  }
  SUBCASE("wrong size is rejected") {
    CHECK_THROWS_AS(benchmark_ansatz(DenseMatrix(4, 4), RotationMode::kReal, 1),
                    std::invalid_argument);
  }
}
