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
#include "vqsvd/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <utility>

namespace vqsvd::kernels {
namespace {

// Lane layout: one __m256d holds two complex doubles [re0 im0 re1 im1].

inline __m256d broadcast_c(cplx c) {
  return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
}

// Lane-wise complex product of two packed complex pairs.
inline __m256d cmul4(__m256d u, __m256d a) {
  const __m256d u_re = _mm256_movedup_pd(u);            // [ur0 ur0 ur1 ur1]
  const __m256d u_im = _mm256_permute_pd(u, 0xF);       // [ui0 ui0 ui1 ui1]
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);       // [im0 re0 im1 re1]
  return _mm256_addsub_pd(_mm256_mul_pd(a, u_re), _mm256_mul_pd(a_sw, u_im));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void apply_2x2_avx2(cplx* amps, std::size_t n, std::size_t stride, cplx u00,
                    cplx u01, cplx u10, cplx u11) {
  double* d = reinterpret_cast<double*>(amps);
  if (stride >= 2) {
    const __m256d v00 = broadcast_c(u00), v01 = broadcast_c(u01);
    const __m256d v10 = broadcast_c(u10), v11 = broadcast_c(u11);
    for (std::size_t base = 0; base < n; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; i += 2) {
        const __m256d a = _mm256_loadu_pd(d + 2 * i);
        const __m256d b = _mm256_loadu_pd(d + 2 * (i + stride));
        _mm256_storeu_pd(d + 2 * i,
                         _mm256_add_pd(cmul4(v00, a), cmul4(v01, b)));
        _mm256_storeu_pd(d + 2 * (i + stride),
                         _mm256_add_pd(cmul4(v10, a), cmul4(v11, b)));
      }
    }
    return;
  }
  // stride == 1: a pair lives in one register; duplicate each half.
  const __m256d col0 = _mm256_setr_pd(u00.real(), u00.imag(), u10.real(), u10.imag());
  const __m256d col1 = _mm256_setr_pd(u01.real(), u01.imag(), u11.real(), u11.imag());
  for (std::size_t i = 0; i < n; i += 2) {
    const __m256d ab = _mm256_loadu_pd(d + 2 * i);
    const __m256d aa = _mm256_permute4x64_pd(ab, 0x44);  // [a a]
    const __m256d bb = _mm256_permute4x64_pd(ab, 0xEE);  // [b b]
    _mm256_storeu_pd(d + 2 * i,
                     _mm256_add_pd(cmul4(col0, aa), cmul4(col1, bb)));
  }
}

void apply_diag_avx2(cplx* amps, std::size_t n, std::size_t stride, cplx d0,
                     cplx d1) {
  double* d = reinterpret_cast<double*>(amps);
  if (stride >= 2) {
    const __m256d v0 = broadcast_c(d0), v1 = broadcast_c(d1);
    for (std::size_t base = 0; base < n; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; i += 2) {
        _mm256_storeu_pd(d + 2 * i, cmul4(v0, _mm256_loadu_pd(d + 2 * i)));
        const std::size_t j = i + stride;
        _mm256_storeu_pd(d + 2 * j, cmul4(v1, _mm256_loadu_pd(d + 2 * j)));
      }
    }
    return;
  }
  const __m256d v01 = _mm256_setr_pd(d0.real(), d0.imag(), d1.real(), d1.imag());
  for (std::size_t i = 0; i < n; i += 2) {
    _mm256_storeu_pd(d + 2 * i, cmul4(v01, _mm256_loadu_pd(d + 2 * i)));
  }
}

void apply_cnot_avx2(cplx* amps, std::size_t n, std::size_t control_stride,
                     std::size_t target_stride) {
  double* d = reinterpret_cast<double*>(amps);
  if (std::min(control_stride, target_stride) >= 2) {
    // Valid indices come in runs of >= 2, so pairs can move together.
    for (std::size_t i = 0; i < n; i += 2) {
      if ((i & control_stride) && !(i & target_stride)) {
        const std::size_t j = i | target_stride;
        const __m256d a = _mm256_loadu_pd(d + 2 * i);
        const __m256d b = _mm256_loadu_pd(d + 2 * j);
        _mm256_storeu_pd(d + 2 * i, b);
        _mm256_storeu_pd(d + 2 * j, a);
      }
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & control_stride) && !(i & target_stride)) {
      std::swap(amps[i], amps[i | target_stride]);
    }
  }
}

cplx cdot_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* dx = reinterpret_cast<const double*>(x);
  const double* dy = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(dx + 2 * i);
    const __m256d vy = _mm256_loadu_pd(dy + 2 * i);
    acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(vx, vy));
    // conj(x)*y imag lanes: +xr*yi - xi*yr via addsub accumulation.
    acc_im = _mm256_addsub_pd(acc_im,
                              _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), vy));
  }
  cplx acc{hsum(acc_re), hsum(acc_im)};
  for (; i < n; ++i) {
    acc += std::conj(x[i]) * y[i];
  }
  return acc;
}

void axpy_avx2(cplx* y, const cplx* x, std::size_t n, cplx a) {
  double* dy = reinterpret_cast<double*>(y);
  const double* dx = reinterpret_cast<const double*>(x);
  const __m256d va = broadcast_c(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vy = _mm256_loadu_pd(dy + 2 * i);
    const __m256d vx = _mm256_loadu_pd(dx + 2 * i);
    _mm256_storeu_pd(dy + 2 * i, _mm256_add_pd(vy, cmul4(va, vx)));
  }
  for (; i < n; ++i) {
    y[i] += a * x[i];
  }
}

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

const KernelTable& avx2_kernels() {
  static const KernelTable table{"avx2",          apply_2x2_avx2,
                                 apply_diag_avx2, apply_cnot_avx2,
                                 cdot_avx2,       axpy_avx2};
  return table;
}

}  // namespace vqsvd::kernels

#endif  // x86-64
