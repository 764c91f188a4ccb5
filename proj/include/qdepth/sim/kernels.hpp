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

#pragma once

#include <complex>
#include <span>
#include <string_view>

namespace qdepth::sim {

using Amplitude = std::complex<double>;

/// Row-major 2x2 gate matrix.
struct Mat2 {
  Amplitude m00, m01, m10, m11;
};

// Every kernel works on a full 2^n amplitude array with basis index bit k
// holding qubit k (qubit 0 is least significant).
struct Kernels {
  void (*apply_1q)(std::span<Amplitude> state, unsigned qubit, const Mat2& m);
  void (*apply_cx)(std::span<Amplitude> state, unsigned control, unsigned target);
  void (*apply_cz)(std::span<Amplitude> state, unsigned a, unsigned b);
  /// Sum of |amp|^2 over basis states with `qubit` set.
  double (*prob_one)(std::span<const Amplitude> state, unsigned qubit);
  /// Zeroes amplitudes inconsistent with `outcome` and scales the rest.
  void (*collapse)(std::span<Amplitude> state, unsigned qubit, int outcome, double scale);
};

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

const Kernels& scalar_kernels();
/// nullptr when the AVX2 translation unit was not built.
const Kernels* avx2_kernels();

bool cpu_supports_avx2();
bool backend_available(Backend b);

/// Kernels used by the oracle. Chosen once at first use: AVX2 when the CPU
/// has it, unless QDEPTH_KERNELS=scalar is set in the environment.
const Kernels& active_kernels();
Backend active_backend();
/// Throws std::runtime_error if `b` is not available on this machine.
void set_backend(Backend b);

}  // namespace qdepth::sim
