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
#include "vqsvd/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vqsvd {
namespace {

constexpr double kPruneTol = 1e-14;

struct PauliMasks {
  std::size_t x = 0;  // bits flipped by the string (X and Y positions)
  std::size_t y = 0;
  std::size_t z = 0;
  int n = 0;
};

PauliMasks masks_of(const PauliString& p) {
  PauliMasks m;
  m.n = p.n_qubits();
  for (int q = 0; q < m.n; ++q) {
    const std::size_t bit = std::size_t{1} << (m.n - 1 - q);  // qubit 0 = MSB
    switch (p.label[static_cast<std::size_t>(q)]) {
      case 'I':
        break;
      case 'X':
        m.x |= bit;
        break;
      case 'Y':
        m.x |= bit;
        m.y |= bit;
        break;
      case 'Z':
        m.z |= bit;
        break;
      default:
        throw std::invalid_argument("PauliString: bad label character '" +
                                    std::string(1, p.label[static_cast<std::size_t>(q)]) + "'");
    }
  }
  return m;
}

// Row i of the realized Pauli matrix has its single nonzero at column
// i ^ masks.x with this value.
cplx pauli_row_phase(const PauliMasks& m, std::size_t i) {
  const int y_total = std::popcount(m.y);
  const int minus =
      std::popcount(i & m.z) + std::popcount(~i & m.y);
  static constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cplx v = i_pow[y_total & 3];
  if (minus & 1) v = -v;
  return v;
}

std::size_t term_dim(const LcuTerm& t) {
  if (const auto* p = std::get_if<PauliString>(&t.unitary)) {
    return std::size_t{1} << p->n_qubits();
  }
  if (const auto* c = std::get_if<CyclicPermutation>(&t.unitary)) {
    return c->dim;
  }
  const auto& m = std::get<DenseMatrix>(t.unitary);
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("LCU term: explicit unitary must be square");
  }
  return m.rows();
}

}  // namespace

DenseMatrix PauliString::to_matrix() const {
  const PauliMasks m = masks_of(*this);
  const std::size_t dim = std::size_t{1} << m.n;
  DenseMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out(i, i ^ m.x) = pauli_row_phase(m, i);
  }
  return out;
}

void PauliString::apply(const std::vector<cplx>& in,
                        std::vector<cplx>& out) const {
  const PauliMasks m = masks_of(*this);
  const std::size_t dim = std::size_t{1} << m.n;
  if (in.size() != dim) {
    throw std::invalid_argument("PauliString::apply: dimension mismatch");
  }
  out.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out[i] = pauli_row_phase(m, i) * in[i ^ m.x];
  }
}

DenseMatrix CyclicPermutation::to_matrix() const {
  DenseMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out(i, (i + shift) % dim) = 1.0;
  }
  return out;
}

void CyclicPermutation::apply(const std::vector<cplx>& in,
                              std::vector<cplx>& out) const {
  if (in.size() != dim) {
    throw std::invalid_argument("CyclicPermutation::apply: dimension mismatch");
  }
  out.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out[i] = in[(i + shift) % dim];
  }
}

DenseMatrix term_matrix(const LcuTerm& term) {
  if (const auto* p = std::get_if<PauliString>(&term.unitary)) {
    return p->to_matrix();
  }
  if (const auto* c = std::get_if<CyclicPermutation>(&term.unitary)) {
    return c->to_matrix();
  }
  return std::get<DenseMatrix>(term.unitary);
}

void apply_term(const LcuTerm& term, const std::vector<cplx>& in,
                std::vector<cplx>& out) {
  if (const auto* p = std::get_if<PauliString>(&term.unitary)) {
    p->apply(in, out);
    return;
  }
  if (const auto* c = std::get_if<CyclicPermutation>(&term.unitary)) {
    c->apply(in, out);
    return;
  }
  out = matvec(std::get<DenseMatrix>(term.unitary), in);
}

int LcuDecomposition::n_qubits() const {
  if (dim == 0 || !std::has_single_bit(dim)) return -1;
  return std::countr_zero(dim);
}

double LcuDecomposition::recompute_l1() const {
  double s = 0.0;
  for (const LcuTerm& t : terms) {
    s += std::abs(t.coeff);
  }
  return s;
}

LcuDecomposition pauli_decompose(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("pauli_decompose: matrix must be square");
  }
  const std::size_t dim = m.rows();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw std::invalid_argument(
        "pauli_decompose: dimension must be a power of two, got " +
        std::to_string(dim));
  }
  const int n = std::countr_zero(dim);

  LcuDecomposition lcu;
  lcu.dim = dim;
  std::size_t label_count = 1;
  for (int q = 0; q < n; ++q) label_count *= 4;

  static constexpr char kAlphabet[4] = {'I', 'X', 'Y', 'Z'};
  std::string label(static_cast<std::size_t>(n), 'I');
  for (std::size_t t = 0; t < label_count; ++t) {
    std::size_t rem = t;
    for (int q = n - 1; q >= 0; --q) {
      label[static_cast<std::size_t>(q)] = kAlphabet[rem & 3];
      rem >>= 2;
    }
    PauliString p{label};
    const PauliMasks pm = masks_of(p);
    cplx trace{};
    for (std::size_t i = 0; i < dim; ++i) {
      trace += pauli_row_phase(pm, i) * m(i ^ pm.x, i);
    }
    const cplx coeff = trace / static_cast<double>(dim);
    if (std::abs(coeff) >= kPruneTol) {
      lcu.terms.push_back({coeff, std::move(p)});
    }
  }
  lcu.l1_norm = lcu.recompute_l1();
  return lcu;
}

DenseMatrix lcu_reconstruct(const LcuDecomposition& lcu) {
  if (lcu.dim == 0) {
    throw std::invalid_argument("lcu_reconstruct: dimension not set");
  }
  DenseMatrix sum(lcu.dim, lcu.dim);
  for (const LcuTerm& t : lcu.terms) {
    if (term_dim(t) != lcu.dim) {
      throw std::invalid_argument("lcu_reconstruct: term dimension mismatch");
    }
    const DenseMatrix a = term_matrix(t);
    for (std::size_t i = 0; i < lcu.dim; ++i) {
      for (std::size_t j = 0; j < lcu.dim; ++j) {
        sum(i, j) += t.coeff * a(i, j);
      }
    }
  }
  return sum;
}

LcuDecomposition circulant_decompose(const std::vector<cplx>& first_row) {
  if (first_row.empty()) {
    throw std::invalid_argument("circulant_decompose: empty coefficient vector");
  }
  const std::size_t d = first_row.size();
  LcuDecomposition lcu;
  lcu.dim = d;
  lcu.terms.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    lcu.terms.push_back({first_row[k], CyclicPermutation{k, d}});
  }
  lcu.l1_norm = lcu.recompute_l1();
  return lcu;
}

std::vector<std::size_t> importance_sample_terms(const LcuDecomposition& lcu,
                                                 std::size_t count,
                                                 std::uint64_t seed) {
  std::vector<double> cum;
  cum.reserve(lcu.terms.size());
  double total = 0.0;
  for (const LcuTerm& t : lcu.terms) {
    total += std::abs(t.coeff);
    cum.push_back(total);
  }
  if (total <= 0.0) {
    throw std::invalid_argument(
        "importance_sample_terms: all coefficients are zero");
  }
  std::vector<std::size_t> out;
  out.reserve(count);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < count; ++s) {
    const double u =
        static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;  // [0, total)
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    out.push_back(static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(it - cum.begin(),
                                 static_cast<std::ptrdiff_t>(cum.size()) - 1)));
  }
  return out;
}

std::size_t sample_count(double l1, double epsilon, double delta) {
  if (!(epsilon > 0.0) || !(delta > 0.0 && delta < 1.0) || !(l1 >= 0.0)) {
    throw std::invalid_argument("sample_count: need epsilon>0, 0<delta<1, l1>=0");
  }
  if (l1 == 0.0) return 0;
  const double v = 2.0 * l1 * l1 * std::log(2.0 / delta) / (epsilon * epsilon);
  return static_cast<std::size_t>(std::ceil(v));
}

namespace {

[[noreturn]] void lcu_fail(const std::string& filename, std::size_t line,
                           const std::string& msg) {
  throw std::runtime_error(filename + ":" + std::to_string(line) + ": " + msg);
}

cplx parse_coeff(const std::string& tok, const std::string& filename,
                 std::size_t line) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos) {
    lcu_fail(filename, line, "expected coefficient token re,im, got '" + tok + "'");
  }
  try {
    return {std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
  } catch (const std::exception&) {
    lcu_fail(filename, line, "cannot parse coefficient '" + tok + "'");
  }
}

}  // namespace

LcuDecomposition read_lcu(std::istream& in, const std::string& filename) {
  std::string header;
  std::size_t line = 0;
  do {
    if (!std::getline(in, header)) {
      lcu_fail(filename, line + 1, "missing LCU header");
    }
    ++line;
  } while (header.find_first_not_of(" \t\r\n") == std::string::npos);

  std::istringstream hs(header);
  int n_qubits = 0;
  long long k = 0;
  if (!(hs >> n_qubits >> k) || n_qubits < 0 || k < 0) {
    lcu_fail(filename, line, "bad header, expected 'n_qubits K'");
  }
  LcuDecomposition lcu;
  lcu.dim = std::size_t{1} << n_qubits;
  for (long long t = 0; t < k; ++t) {
    std::string body;
    if (!std::getline(in, body)) {
      lcu_fail(filename, line + 1, "expected " + std::to_string(k) +
                                       " term lines, found " + std::to_string(t));
    }
    ++line;
    std::istringstream ls(body);
    std::string coeff_tok, kind;
    if (!(ls >> coeff_tok >> kind)) {
      lcu_fail(filename, line, "bad term line '" + body + "'");
    }
    const cplx c = parse_coeff(coeff_tok, filename, line);
    if (kind == "PERM") {
      long long shift = -1;
      if (!(ls >> shift) || shift < 0 ||
          static_cast<std::size_t>(shift) >= lcu.dim) {
        lcu_fail(filename, line, "bad PERM shift");
      }
      lcu.terms.push_back(
          {c, CyclicPermutation{static_cast<std::size_t>(shift), lcu.dim}});
    } else {
      if (kind.size() != static_cast<std::size_t>(n_qubits) ||
          kind.find_first_not_of("IXYZ") != std::string::npos) {
        lcu_fail(filename, line, "bad Pauli label '" + kind + "'");
      }
      lcu.terms.push_back({c, PauliString{kind}});
    }
  }
  lcu.l1_norm = lcu.recompute_l1();
  return lcu;
}

LcuDecomposition read_lcu_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  return read_lcu(in, path);
}

void write_lcu(std::ostream& out, const LcuDecomposition& lcu) {
  const int n = lcu.n_qubits();
  if (n < 0) {
    throw std::runtime_error(
        "write_lcu: text format requires a power-of-two dimension");
  }
  out << n << ' ' << lcu.terms.size() << '\n';
  for (const LcuTerm& t : lcu.terms) {
    out << format_g17(t.coeff.real()) << ',' << format_g17(t.coeff.imag())
        << ' ';
    if (const auto* p = std::get_if<PauliString>(&t.unitary)) {
      out << p->label << '\n';
    } else if (const auto* c = std::get_if<CyclicPermutation>(&t.unitary)) {
      out << "PERM " << c->shift << '\n';
    } else {
      throw std::runtime_error(
          "write_lcu: explicit matrix terms are not representable");
    }
  }
}

void write_lcu_file(const std::string& path, const LcuDecomposition& lcu) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  write_lcu(out, lcu);
  if (!out) {
    throw std::runtime_error(path + ": write failed");
  }
}

}  // namespace vqsvd
