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
#include <cstdlib>
#include <string_view>

#include "vqsvd/kernels/kernels.hpp"

namespace vqsvd::kernels {
namespace {

const KernelTable* select() {
  const char* env = std::getenv("VQSVD_KERNELS");
  const std::string_view wanted = env ? env : "";
  if (wanted == "scalar") {
    return &scalar_kernels();
  }
#if defined(__x86_64__) || defined(_M_X64)
  if ((wanted.empty() || wanted == "avx2") && avx2_supported()) {
    return &avx2_kernels();
  }
#endif
  return &scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable* table = select();
  return *table;
}

}  // namespace vqsvd::kernels
