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
#include "vqsvd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vqsvd {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("DenseMatrix: entries length " +
                                std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows_) +
                                "x" + std::to_string(cols_));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

void DenseMatrix::require_finite(const std::string& what) const {
  for (const cplx& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw std::invalid_argument(what + ": non-finite matrix entry");
    }
  }
}

std::vector<cplx> DenseMatrix::column(std::size_t j) const {
  std::vector<cplx> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    v[i] = (*this)(i, j);
  }
  return v;
}

void DenseMatrix::set_column(std::size_t j, const std::vector<cplx>& v) {
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, j) = v[i];
  }
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimensions differ");
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shapes differ");
  }
  DenseMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) += b(i, j);
    }
  }
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix difference: shapes differ");
  }
  DenseMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) -= b(i, j);
    }
  }
  return out;
}

DenseMatrix operator*(cplx s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) *= s;
    }
  }
  return out;
}

std::vector<cplx> matvec(const DenseMatrix& a, const std::vector<cplx>& x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  std::vector<cplx> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc += a(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

std::size_t SvdTriple::rank() const {
  if (singular_values.empty()) return 0;
  const double thresh = 1e-12 * singular_values.front();
  std::size_t r = 0;
  for (double d : singular_values) {
    if (d > thresh) ++r;
  }
  return r;
}

namespace {

double column_dot_self(const DenseMatrix& a, std::size_t j) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += std::norm(a(i, j));
  }
  return s;
}

cplx column_dot(const DenseMatrix& a, std::size_t p, std::size_t q) {
  cplx s{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += std::conj(a(i, p)) * a(i, q);
  }
  return s;
}

// One-sided Jacobi for rows >= cols. Orthogonalizes the columns of a working
// copy A by right rotations; the accumulated rotations form V, the surviving
// column directions form U and the column norms the singular values.
SvdTriple jacobi_svd_tall(const DenseMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  DenseMatrix a = m;
  DenseMatrix v = DenseMatrix::identity(cols);

  constexpr double kOrthTol = 1e-15;
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double gpp = column_dot_self(a, p);
        const double gqq = column_dot_self(a, q);
        const cplx gpq = column_dot(a, p, q);
        const double off = std::abs(gpq);
        if (off <= kOrthTol * std::sqrt(gpp * gqq) || off == 0.0) {
          continue;
        }
        rotated = true;
        // Diagonalize the 2x2 Hermitian Gram block [[gpp, gpq],[gpq*, gqq]]:
        // strip the phase of gpq, then a real Jacobi rotation.
        const cplx phase = gpq / off;
        const double zeta = (gqq - gpp) / (2.0 * off);
        const double t =
            (zeta >= 0.0 ? 1.0 / (zeta + std::sqrt(1.0 + zeta * zeta))
                         : -1.0 / (-zeta + std::sqrt(1.0 + zeta * zeta)));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        const cplx ph_conj = std::conj(phase);
        for (std::size_t i = 0; i < rows; ++i) {
          const cplx ap = a(i, p);
          const cplx aq = ph_conj * a(i, q);
          a(i, p) = cs * ap - sn * aq;
          a(i, q) = sn * ap + cs * aq;
        }
        for (std::size_t i = 0; i < cols; ++i) {
          const cplx vp = v(i, p);
          const cplx vq = ph_conj * v(i, q);
          v(i, p) = cs * vp - sn * vq;
          v(i, q) = sn * vp + cs * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> d(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    d[j] = std::sqrt(column_dot_self(a, j));
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });

  SvdTriple out;
  out.singular_values.resize(cols);
  out.left_vectors = DenseMatrix(rows, cols);
  out.right_vectors = DenseMatrix(cols, cols);
  const double dmax = d[order.front()];
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    out.singular_values[j] = d[src];
    for (std::size_t i = 0; i < cols; ++i) {
      out.right_vectors(i, j) = v(i, src);
    }
    if (d[src] > dmax * 1e-14 && d[src] > 0.0) {
      for (std::size_t i = 0; i < rows; ++i) {
        out.left_vectors(i, j) = a(i, src) / d[src];
      }
    } else {
      out.singular_values[j] = 0.0;
      // Null direction: complete U with the first basis vector that keeps
      // the columns orthonormal.
      for (std::size_t cand = 0; cand < rows; ++cand) {
        std::vector<cplx> e(rows);
        e[cand] = 1.0;
        for (std::size_t prev = 0; prev < j; ++prev) {
          cplx overlap{};
          for (std::size_t i = 0; i < rows; ++i) {
            overlap += std::conj(out.left_vectors(i, prev)) * e[i];
          }
          for (std::size_t i = 0; i < rows; ++i) {
            e[i] -= overlap * out.left_vectors(i, prev);
          }
        }
        double nrm = 0.0;
        for (const cplx& x : e) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm > 0.5) {
          for (std::size_t i = 0; i < rows; ++i) {
            out.left_vectors(i, j) = e[i] / nrm;
          }
          break;
        }
      }
    }
  }
  return out;
}

void fix_phases(SvdTriple& t) {
  const std::size_t k = t.singular_values.size();
  for (std::size_t j = 0; j < k; ++j) {
    cplx pivot{};
    for (std::size_t i = 0; i < t.right_vectors.rows(); ++i) {
      if (std::abs(t.right_vectors(i, j)) > 1e-10) {
        pivot = t.right_vectors(i, j);
        break;
      }
    }
    if (pivot == cplx{}) continue;
    const cplx ph = std::conj(pivot / std::abs(pivot));
    for (std::size_t i = 0; i < t.right_vectors.rows(); ++i) {
      t.right_vectors(i, j) *= ph;
    }
    for (std::size_t i = 0; i < t.left_vectors.rows(); ++i) {
      t.left_vectors(i, j) *= ph;
    }
  }
}

}  // namespace

SvdTriple classical_svd(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw std::invalid_argument("classical_svd: empty matrix");
  }
  m.require_finite("classical_svd");
  SvdTriple t;
  if (m.rows() >= m.cols()) {
    t = jacobi_svd_tall(m);
  } else {
    // M = (U' S V'^+)^+ of the adjoint: swap the vector families.
    SvdTriple ta = jacobi_svd_tall(m.adjoint());
    t.singular_values = std::move(ta.singular_values);
    t.left_vectors = std::move(ta.right_vectors);
    t.right_vectors = std::move(ta.left_vectors);
  }
  fix_phases(t);
  return t;
}

double frobenius_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (const cplx& e : m.entries()) {
    s += std::norm(e);
  }
  return std::sqrt(s);
}

DenseMatrix reconstruct_rank_t(const std::vector<double>& values,
                               const DenseMatrix& lefts,
                               const DenseMatrix& rights, std::size_t t) {
  if (t > values.size() || t > lefts.cols() || t > rights.cols()) {
    throw std::invalid_argument(
        "reconstruct_rank_t: t exceeds available singular triplets");
  }
  DenseMatrix out(lefts.rows(), rights.rows());
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < lefts.rows(); ++i) {
      const cplx scaled = values[j] * lefts(i, j);
      for (std::size_t k = 0; k < rights.rows(); ++k) {
        out(i, k) += scaled * std::conj(rights(k, j));
      }
    }
  }
  return out;
}

PolarFactors polar_decompose(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("polar_decompose: matrix must be square");
  }
  const SvdTriple t = classical_svd(m);
  const std::size_t n = m.rows();
  PolarFactors f;
  f.w = t.left_vectors * t.right_vectors.adjoint();
  DenseMatrix dv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      dv(j, i) = t.singular_values[j] * std::conj(t.right_vectors(i, j));
    }
  }
  f.p = t.right_vectors * dv;
  return f;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

[[noreturn]] void parse_fail(const std::string& filename, std::size_t line,
                             const std::string& msg) {
  throw std::runtime_error(filename + ":" + std::to_string(line) + ": " + msg);
}

cplx parse_token(const std::string& tok, bool complex_field,
                 const std::string& filename, std::size_t line) {
  const auto comma = tok.find(',');
  if (complex_field) {
    if (comma == std::string::npos) {
      parse_fail(filename, line, "expected complex token re,im but got '" + tok + "'");
    }
  } else if (comma != std::string::npos) {
    parse_fail(filename, line, "real matrix contains complex token '" + tok + "'");
  }
  try {
    if (comma == std::string::npos) {
      std::size_t used = 0;
      const double re = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return {re, 0.0};
    }
    std::size_t used = 0;
    const std::string re_s = tok.substr(0, comma);
    const std::string im_s = tok.substr(comma + 1);
    const double re = std::stod(re_s, &used);
    if (used != re_s.size()) throw std::invalid_argument(tok);
    const double im = std::stod(im_s, &used);
    if (used != im_s.size()) throw std::invalid_argument(tok);
    return {re, im};
  } catch (const std::exception&) {
    parse_fail(filename, line, "cannot parse numeric token '" + tok + "'");
  }
}

}  // namespace

DenseMatrix read_matrix(std::istream& in, const std::string& filename) {
  std::string header;
  std::size_t line = 0;
  do {
    if (!std::getline(in, header)) {
      parse_fail(filename, line + 1, "missing matrix header");
    }
    ++line;
  } while (header.find_first_not_of(" \t\r\n") == std::string::npos);

  std::istringstream hs(header);
  long long rows = 0, cols = 0;
  std::string field;
  if (!(hs >> rows >> cols >> field) || rows <= 0 || cols <= 0 ||
      (field != "real" && field != "complex")) {
    parse_fail(filename, line, "bad header, expected 'rows cols real|complex'");
  }
  const bool complex_field = field == "complex";

  DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t count = 0;
  const std::size_t total = m.rows() * m.cols();
  std::string body_line;
  while (count < total && std::getline(in, body_line)) {
    ++line;
    std::istringstream ls(body_line);
    std::string tok;
    while (ls >> tok) {
      if (count >= total) {
        parse_fail(filename, line, "more entries than rows*cols");
      }
      m(count / m.cols(), count % m.cols()) =
          parse_token(tok, complex_field, filename, line);
      ++count;
    }
  }
  if (count != total) {
    parse_fail(filename, line + 1,
               "expected " + std::to_string(total) + " entries, found " +
                   std::to_string(count));
  }
  return m;
}

DenseMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  bool complex_field = false;
  for (const cplx& e : m.entries()) {
    if (e.imag() != 0.0) {
      complex_field = true;
      break;
    }
  }
  out << m.rows() << ' ' << m.cols() << ' '
      << (complex_field ? "complex" : "real") << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      if (complex_field) {
        out << format_g17(m(i, j).real()) << ',' << format_g17(m(i, j).imag());
      } else {
        out << format_g17(m(i, j).real());
      }
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  write_matrix(out, m);
  if (!out) {
    throw std::runtime_error(path + ": write failed");
  }
}

}  // namespace vqsvd
