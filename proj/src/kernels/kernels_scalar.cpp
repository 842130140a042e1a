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
#include <utility>

#include "vqsvd/kernels/kernels.hpp"

namespace vqsvd::kernels {
namespace {

void apply_2x2_scalar(cplx* amps, std::size_t n, std::size_t stride, cplx u00,
                      cplx u01, cplx u10, cplx u11) {
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a = amps[i];
      const cplx b = amps[i + stride];
      amps[i] = u00 * a + u01 * b;
      amps[i + stride] = u10 * a + u11 * b;
    }
  }
}

void apply_diag_scalar(cplx* amps, std::size_t n, std::size_t stride, cplx d0,
                       cplx d1) {
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      amps[i] *= d0;
      amps[i + stride] *= d1;
    }
  }
}

void apply_cnot_scalar(cplx* amps, std::size_t n, std::size_t control_stride,
                       std::size_t target_stride) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & control_stride) && !(i & target_stride)) {
      std::swap(amps[i], amps[i | target_stride]);
    }
  }
}

cplx cdot_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::conj(x[i]) * y[i];
  }
  return acc;
}

void axpy_scalar(cplx* y, const cplx* x, std::size_t n, cplx a) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += a * x[i];
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",           apply_2x2_scalar,
                                 apply_diag_scalar,  apply_cnot_scalar,
                                 cdot_scalar,        axpy_scalar};
  return table;
}

}  // namespace vqsvd::kernels
