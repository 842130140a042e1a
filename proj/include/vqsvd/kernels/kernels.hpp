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
#ifndef VQSVD_KERNELS_KERNELS_HPP_
#define VQSVD_KERNELS_KERNELS_HPP_

#include <complex>
#include <cstddef>

namespace vqsvd::kernels {

using cplx = std::complex<double>;

// Data-parallel inner loops of the simulator. Every entry has a scalar
// reference implementation and (on x86-64) an AVX2 variant; the two are
// equivalence-tested against each other. `stride` is the distance between
// the |0> and |1> amplitudes of the acted-on qubit, always a power of two.
struct KernelTable {
  const char* name;

  // amps[i], amps[i+stride] <- [[u00,u01],[u10,u11]] * (amps[i], amps[i+stride])
  // for every index i whose stride bit is clear; n is the state length.
  void (*apply_2x2)(cplx* amps, std::size_t n, std::size_t stride, cplx u00,
                    cplx u01, cplx u10, cplx u11);

  // amps[i] *= d0 / amps[i+stride] *= d1 over the same pair enumeration.
  void (*apply_diag)(cplx* amps, std::size_t n, std::size_t stride, cplx d0,
                     cplx d1);

  // Swap amps[i] <-> amps[i+target_stride] wherever the control bit is set
  // and the target bit is clear.
  void (*apply_cnot)(cplx* amps, std::size_t n, std::size_t control_stride,
                     std::size_t target_stride);

  // sum_i conj(x[i]) * y[i]
  cplx (*cdot)(const cplx* x, const cplx* y, std::size_t n);

  // y[i] += a * x[i]
  void (*axpy)(cplx* y, const cplx* x, std::size_t n, cplx a);
};

const KernelTable& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
const KernelTable& avx2_kernels();
#endif

// Table used by the rest of the library. Picks AVX2 when the CPU supports it;
// the VQSVD_KERNELS environment variable ("scalar" or "avx2") forces a choice.
const KernelTable& active_kernels();

}  // namespace vqsvd::kernels

#endif  // VQSVD_KERNELS_KERNELS_HPP_
