// Copyright 2026 The qdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qdepth/sim/kernels.hpp"

namespace qdepth::sim {

#if !defined(QDEPTH_HAVE_AVX2_TU)
const Kernels* avx2_kernels() { return nullptr; }
#endif

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool cpu_supports_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
  return avx2_kernels() != nullptr && cpu_supports_avx2();
}

namespace {

Backend initial_backend() {
  if (const char* env = std::getenv("QDEPTH_KERNELS"); env && std::string(env) == "scalar") {
    return Backend::Scalar;
  }
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

const Kernels& active_kernels() {
  return active_backend() == Backend::Avx2 ? *avx2_kernels() : scalar_kernels();
}

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::runtime_error("kernel backend '" + std::string(to_string(b)) + "' is not available");
  }
  current().store(b, std::memory_order_relaxed);
}

}  // namespace qdepth::sim
