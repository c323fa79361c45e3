// Copyright 2026 The qot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <cstring>

#include "qot/kernels.hpp"

namespace qot::kernels {

#ifdef QOT_WITH_AVX2
const Ops& avx2_ops_table();
#endif

bool avx2_available() {
#ifdef QOT_WITH_AVX2
  static const bool ok =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

const Ops& avx2_ops() {
#ifdef QOT_WITH_AVX2
  if (avx2_available()) return avx2_ops_table();
#endif
  return scalar_ops();
}

namespace {

const Ops& select() {
  const char* req = std::getenv("QOT_KERNELS");
  if (req != nullptr) {
    if (std::strcmp(req, "scalar") == 0) return scalar_ops();
    if (std::strcmp(req, "avx2") == 0) return avx2_ops();
  }
  return avx2_available() ? avx2_ops() : scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = select();
  return ops;
}

}  // namespace qot::kernels
