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

#include <algorithm>
#include <utility>

#include "bits.hpp"
#include "qdepth/sim/kernels.hpp"

namespace qdepth::sim {

namespace {

using detail::insert_two_zeros;
using detail::insert_zero;

void apply_1q(std::span<Amplitude> s, unsigned q, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t half = s.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(k, q);
    const std::size_t i1 = i0 | bit;
    const Amplitude a0 = s[i0];
    const Amplitude a1 = s[i1];
    s[i0] = m.m00 * a0 + m.m01 * a1;
    s[i1] = m.m10 * a0 + m.m11 * a1;
  }
}

void apply_cx(std::span<Amplitude> s, unsigned control, unsigned target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t quarter = s.size() / 4;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t base = insert_two_zeros(k, std::min(control, target), std::max(control, target));
    std::swap(s[base | cbit], s[base | cbit | tbit]);
  }
}

void apply_cz(std::span<Amplitude> s, unsigned a, unsigned b) {
  const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
  const std::size_t quarter = s.size() / 4;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i = insert_two_zeros(k, std::min(a, b), std::max(a, b)) | both;
    s[i] = -s[i];
  }
}

double prob_one(std::span<const Amplitude> s, unsigned q) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t half = s.size() / 2;
  double p = 0.0;
  for (std::size_t k = 0; k < half; ++k) p += std::norm(s[insert_zero(k, q) | bit]);
  return p;
}

void collapse(std::span<Amplitude> s, unsigned q, int outcome, double scale) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool set = (i & bit) != 0;
    s[i] = (set == (outcome != 0)) ? s[i] * scale : Amplitude{};
  }
}

constexpr Kernels kScalar{apply_1q, apply_cx, apply_cz, prob_one, collapse};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace qdepth::sim
