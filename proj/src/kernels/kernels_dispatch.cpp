// Copyright 2026 The toricsim authors
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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "toricsim/kernels.hpp"

namespace toricsim::kernels {

bool cpu_supports_avx2() {
#if defined(TORICSIM_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelOps* pick_default() {
  const char* env = std::getenv("TORICSIM_KERNELS");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
#if defined(TORICSIM_HAVE_AVX2)
    if (std::strcmp(env, "avx2") == 0 && cpu_supports_avx2()) {
      return &avx2_ops();
    }
#endif
  }
#if defined(TORICSIM_HAVE_AVX2)
  if (cpu_supports_avx2()) return &avx2_ops();
#endif
  return &scalar_ops();
}

std::atomic<const KernelOps*>& active_slot() {
  static std::atomic<const KernelOps*> slot{pick_default()};
  return slot;
}

}  // namespace

const KernelOps& active_ops() { return *active_slot().load(); }

void select_ops(const char* name) {
  if (std::strcmp(name, "scalar") == 0) {
    active_slot().store(&scalar_ops());
    return;
  }
#if defined(TORICSIM_HAVE_AVX2)
  if (std::strcmp(name, "avx2") == 0) {
    if (!cpu_supports_avx2()) {
      throw std::runtime_error("avx2 kernels not supported on this CPU");
    }
    active_slot().store(&avx2_ops());
    return;
  }
#endif
  throw std::runtime_error("unknown kernel set: " + std::string(name));
}

}  // namespace toricsim::kernels
