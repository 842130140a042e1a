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
#include <map>
#include <random>
#include <sstream>

#include "test_util.hpp"
#include "vqsvd/pauli.hpp"

using namespace vqsvd;
using namespace vqsvd::testutil;

TEST_CASE("Pauli string realization") {
  CHECK(max_abs_diff(PauliString{"Z"}.to_matrix(), diag({1.0, -1.0})) == 0.0);
  DenseMatrix y(2, 2);
  y(0, 1) = cplx{0.0, -1.0};
  y(1, 0) = cplx{0.0, 1.0};
  CHECK(max_abs_diff(PauliString{"Y"}.to_matrix(), y) == 0.0);

  // Kronecker structure: XZ acts as X on qubit 0 (MSB) and Z on qubit 1.
  const DenseMatrix xz = PauliString{"XZ"}.to_matrix();
  DenseMatrix want(4, 4);
  want(0, 2) = 1.0;
  want(1, 3) = -1.0;
  want(2, 0) = 1.0;
  want(3, 1) = -1.0;
  CHECK(max_abs_diff(xz, want) == 0.0);

  std::mt19937_64 rng(3);
  for (const char* label : {"X", "Y", "ZI", "XY", "YZX"}) {
    const DenseMatrix p = PauliString{label}.to_matrix();
    const std::size_t n = p.rows();
    CHECK(max_abs_diff(p, p.adjoint()) == 0.0);  // Hermitian
    CHECK(frobenius_norm(p.adjoint() * p - DenseMatrix::identity(n)) == 0.0);
    // apply() matches the dense product on a random vector.
    std::vector<cplx> x(n), out;
    for (cplx& v : x) v = cplx{gauss(rng), gauss(rng)};
    PauliString{label}.apply(x, out);
    const std::vector<cplx> want_v = matvec(p, x);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(out[i] - want_v[i]) < 1e-15);
    }
  }
}

TEST_CASE("pauli_decompose worked examples") {
  SUBCASE("Z") {
    const LcuDecomposition lcu = pauli_decompose(diag({1.0, -1.0}));
    REQUIRE(lcu.terms.size() == 1);
    CHECK(std::get<PauliString>(lcu.terms[0].unitary).label == "Z");
    CHECK(std::abs(lcu.terms[0].coeff - cplx{1.0, 0.0}) < 1e-15);
    CHECK(lcu.l1_norm == doctest::Approx(1.0));
  }
  SUBCASE("nilpotent [[0,1],[0,0]] = X/2 + iY/2") {
    DenseMatrix m(2, 2);
    m(0, 1) = 1.0;
    const LcuDecomposition lcu = pauli_decompose(m);
    REQUIRE(lcu.terms.size() == 2);
    std::map<std::string, cplx> got;
    for (const LcuTerm& t : lcu.terms) {
      got[std::get<PauliString>(t.unitary).label] = t.coeff;
    }
    CHECK(std::abs(got.at("X") - cplx{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(got.at("Y") - cplx{0.0, 0.5}) < 1e-15);
  }
  SUBCASE("4x4 identity") {
    const LcuDecomposition lcu = pauli_decompose(DenseMatrix::identity(4));
    REQUIRE(lcu.terms.size() == 1);
    CHECK(std::get<PauliString>(lcu.terms[0].unitary).label == "II");
    CHECK(std::abs(lcu.terms[0].coeff - cplx{1.0, 0.0}) < 1e-15);
  }
  SUBCASE("non-power-of-two dimension is rejected") {
    CHECK_THROWS_AS(pauli_decompose(DenseMatrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(pauli_decompose(DenseMatrix(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("lcu_reconstruct examples") {
  SUBCASE("single Z term") {
    LcuDecomposition lcu;
    lcu.dim = 2;
    lcu.terms.push_back({cplx{1.0, 0.0}, PauliString{"Z"}});
    lcu.l1_norm = 1.0;
    CHECK(max_abs_diff(lcu_reconstruct(lcu), diag({1.0, -1.0})) == 0.0);
  }
  SUBCASE("X/2 + iY/2 rebuilds the nilpotent") {
    LcuDecomposition lcu;
    lcu.dim = 2;
    lcu.terms.push_back({cplx{0.5, 0.0}, PauliString{"X"}});
    lcu.terms.push_back({cplx{0.0, 0.5}, PauliString{"Y"}});
    lcu.l1_norm = 1.0;
    DenseMatrix want(2, 2);
    want(0, 1) = 1.0;
    CHECK(max_abs_diff(lcu_reconstruct(lcu), want) < 1e-15);
  }
  SUBCASE("empty term list is the zero matrix") {
    LcuDecomposition lcu;
    lcu.dim = 4;
    CHECK(frobenius_norm(lcu_reconstruct(lcu)) == 0.0);
  }
  SUBCASE("dimension mismatch is rejected") {
    LcuDecomposition lcu;
    lcu.dim = 4;
    lcu.terms.push_back({cplx{1.0, 0.0}, PauliString{"Z"}});
    CHECK_THROWS_AS(lcu_reconstruct(lcu), std::invalid_argument);
  }
}

TEST_CASE("pauli roundtrip on random 2-4 qubit matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3 + 1;  // 2..4 qubits
    const std::size_t dim = std::size_t{1} << n;
    const DenseMatrix m = (trial % 2 == 0)
                              ? random_real_matrix(dim, dim, rng)
                              : random_complex_matrix(dim, dim, rng);
    const LcuDecomposition lcu = pauli_decompose(m);
    CHECK(max_abs_diff(lcu_reconstruct(lcu), m) < 1e-10);
    CHECK(std::abs(lcu.l1_norm - lcu.recompute_l1()) == 0.0);
  }
}

TEST_CASE("Hermitian inputs give real Pauli coefficients") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    DenseMatrix m = random_complex_matrix(8, 8, rng);
    m = cplx{0.5, 0.0} * (m + m.adjoint());
    for (const LcuTerm& t : pauli_decompose(m).terms) {
      CHECK(std::abs(t.coeff.imag()) < 1e-12);
    }
  }
}

TEST_CASE("circulant decomposition") {
  SUBCASE("delta coefficients give the identity") {
    const LcuDecomposition lcu = circulant_decompose({cplx{1.0, 0.0}, {}, {}});
    CHECK(max_abs_diff(lcu_reconstruct(lcu), DenseMatrix::identity(3)) == 0.0);
  }
  SUBCASE("2x2 off-diagonal") {
    const LcuDecomposition lcu = circulant_decompose({{}, cplx{1.0, 0.0}});
    DenseMatrix want(2, 2);
    want(0, 1) = 1.0;
    want(1, 0) = 1.0;
    CHECK(max_abs_diff(lcu_reconstruct(lcu), want) == 0.0);
  }
  SUBCASE("3x3 row pattern (1,2,3)") {
    const LcuDecomposition lcu = circulant_decompose(
        {cplx{1.0, 0.0}, cplx{2.0, 0.0}, cplx{3.0, 0.0}});
    const DenseMatrix c = lcu_reconstruct(lcu);
    const double want[3][3] = {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(c(i, j) == cplx{want[i][j], 0.0});
      }
    }
  }
  SUBCASE("empty coefficient vector is rejected") {
    CHECK_THROWS_AS(circulant_decompose({}), std::invalid_argument);
  }
  SUBCASE("circulants commute with the unit shift") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = 2 + rng() % 7;
      std::vector<cplx> row(d);
      for (cplx& x : row) x = cplx{gauss(rng), gauss(rng)};
      const DenseMatrix c = lcu_reconstruct(circulant_decompose(row));
      const DenseMatrix p1 = CyclicPermutation{1, d}.to_matrix();
      CHECK(max_abs_diff(c * p1, p1 * c) < 1e-12);
    }
  }
}

TEST_CASE("circulant roundtrip on random first rows") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 12;
    std::vector<cplx> row(d);
    for (cplx& x : row) x = cplx{gauss(rng), gauss(rng)};
    const DenseMatrix c = lcu_reconstruct(circulant_decompose(row));
    // Independent construction: C_{ij} = row[(j - i) mod d].
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        CHECK(std::abs(c(i, j) - row[(j + d - i) % d]) == 0.0);
      }
    }
  }
}

TEST_CASE("importance sampling") {
  SUBCASE("single term always selects index 0") {
    LcuDecomposition lcu;
    lcu.dim = 2;
    lcu.terms.push_back({cplx{0.7, 0.0}, PauliString{"X"}});
    lcu.l1_norm = 0.7;
    const auto idx = importance_sample_terms(lcu, 10, 99);
    REQUIRE(idx.size() == 10);
    for (std::size_t i : idx) CHECK(i == 0);
  }
  SUBCASE("two terms with |c| = (1,3) hit 0.75 within 0.01") {
    LcuDecomposition lcu;
    lcu.dim = 2;
    lcu.terms.push_back({cplx{1.0, 0.0}, PauliString{"X"}});
    lcu.terms.push_back({cplx{-3.0, 0.0}, PauliString{"Z"}});
    lcu.l1_norm = 4.0;
    const auto idx = importance_sample_terms(lcu, 100000, 424242);
    double frac = 0.0;
    for (std::size_t i : idx) frac += (i == 1) ? 1.0 : 0.0;
    frac /= static_cast<double>(idx.size());
    CHECK(std::abs(frac - 0.75) < 0.01);
  }
  SUBCASE("count 0 gives an empty list") {
    LcuDecomposition lcu;
    lcu.dim = 2;
    lcu.terms.push_back({cplx{1.0, 0.0}, PauliString{"X"}});
    lcu.l1_norm = 1.0;
    CHECK(importance_sample_terms(lcu, 0, 1).empty());
  }
  SUBCASE("all-zero coefficients are rejected") {
    LcuDecomposition lcu;
    lcu.dim = 2;
    lcu.terms.push_back({cplx{}, PauliString{"X"}});
    CHECK_THROWS_AS(importance_sample_terms(lcu, 5, 1), std::invalid_argument);
  }
  SUBCASE("deterministic for a fixed seed") {
    LcuDecomposition lcu;
    lcu.dim = 2;
    lcu.terms.push_back({cplx{1.0, 0.0}, PauliString{"X"}});
    lcu.terms.push_back({cplx{2.0, 0.0}, PauliString{"Y"}});
    lcu.terms.push_back({cplx{0.5, 0.0}, PauliString{"Z"}});
    lcu.l1_norm = 3.5;
    CHECK(importance_sample_terms(lcu, 1000, 5) ==
          importance_sample_terms(lcu, 1000, 5));
  }
}

TEST_CASE("sample_count budget formula") {
  CHECK(sample_count(0.0, 0.1, 0.05) == 0);
  CHECK(sample_count(2.0, 0.1, 0.05) == 2952);
  // Halving epsilon quadruples the budget (up to the ceil).
  const std::size_t base = sample_count(1.5, 0.2, 0.1);
  const std::size_t fine = sample_count(1.5, 0.1, 0.1);
  CHECK(fine >= 4 * base - 4);
  CHECK(fine <= 4 * base + 4);
  CHECK_THROWS_AS(sample_count(1.0, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(sample_count(1.0, 0.1, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(sample_count(-1.0, 0.1, 0.5), std::invalid_argument);
}

TEST_CASE("LCU text format") {
  SUBCASE("pauli roundtrip") {
    std::mt19937_64 rng(21);
    const LcuDecomposition lcu =
        pauli_decompose(random_complex_matrix(4, 4, rng));
    std::stringstream s;
    write_lcu(s, lcu);
    const LcuDecomposition back = read_lcu(s, "buffer");
    CHECK(back.dim == lcu.dim);
    REQUIRE(back.terms.size() == lcu.terms.size());
    CHECK(max_abs_diff(lcu_reconstruct(back), lcu_reconstruct(lcu)) == 0.0);
    CHECK(back.l1_norm == doctest::Approx(lcu.l1_norm).epsilon(1e-15));
  }
  SUBCASE("permutation terms roundtrip for power-of-two dims") {
    const LcuDecomposition lcu = circulant_decompose(
        {cplx{1.0, 0.0}, cplx{0.0, 2.0}, cplx{-1.0, 0.0}, cplx{0.5, 0.5}});
    std::stringstream s;
    write_lcu(s, lcu);
    const LcuDecomposition back = read_lcu(s, "buffer");
    CHECK(max_abs_diff(lcu_reconstruct(back), lcu_reconstruct(lcu)) == 0.0);
  }
  SUBCASE("non-power-of-two dims are not representable") {
    const LcuDecomposition lcu =
        circulant_decompose({cplx{1.0, 0.0}, cplx{2.0, 0.0}, cplx{3.0, 0.0}});
    std::stringstream s;
    CHECK_THROWS_AS(write_lcu(s, lcu), std::runtime_error);
  }
  SUBCASE("parse errors carry file and line") {
    std::stringstream s("1 2\n0.5,0 X\nbroken\n");
    try {
      read_lcu(s, "lcu.txt");
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("lcu.txt:3") == 0);
    }
  }
}
