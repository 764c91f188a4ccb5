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

// Built with -mavx2 -mfma. Nothing in here may run before dispatch has
// confirmed CPU support.

#include <immintrin.h>

#include <algorithm>

#include "bits.hpp"
#include "qdepth/sim/kernels.hpp"

namespace qdepth::sim {

namespace {

using detail::insert_two_zeros;
using detail::insert_zero;

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const Amplitude* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store2(Amplitude* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}
inline __m256d splat(Amplitude z) { return _mm256_setr_pd(z.real(), z.imag(), z.real(), z.imag()); }

// Lane-wise complex product.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

void apply_1q(std::span<Amplitude> s, unsigned q, const Mat2& m) {
  Amplitude* data = s.data();
  const std::size_t n = s.size();
  if (q == 0) {
    // Both amplitudes of a pair share one register.
    const __m256d col0 = _mm256_setr_pd(m.m00.real(), m.m00.imag(), m.m10.real(), m.m10.imag());
    const __m256d col1 = _mm256_setr_pd(m.m01.real(), m.m01.imag(), m.m11.real(), m.m11.imag());
    for (std::size_t i = 0; i < n; i += 2) {
      const __m256d a = load2(data + i);
      const __m256d lo = _mm256_permute2f128_pd(a, a, 0x00);
      const __m256d hi = _mm256_permute2f128_pd(a, a, 0x11);
      store2(data + i, _mm256_add_pd(cmul(lo, col0), cmul(hi, col1)));
    }
    return;
  }
  const __m256d m00 = splat(m.m00), m01 = splat(m.m01), m10 = splat(m.m10), m11 = splat(m.m11);
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    Amplitude* lo = data + base;
    Amplitude* hi = lo + stride;
    for (std::size_t j = 0; j < stride; j += 2) {
      const __m256d a0 = load2(lo + j);
      const __m256d a1 = load2(hi + j);
      store2(lo + j, _mm256_add_pd(cmul(a0, m00), cmul(a1, m01)));
      store2(hi + j, _mm256_add_pd(cmul(a0, m10), cmul(a1, m11)));
    }
  }
}

void apply_cx(std::span<Amplitude> s, unsigned control, unsigned target) {
  if (control == 0 || target == 0) {
    scalar_kernels().apply_cx(s, control, target);
    return;
  }
  const unsigned lo = std::min(control, target), hi = std::max(control, target);
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t quarter = s.size() / 4;
  Amplitude* data = s.data();
  for (std::size_t k = 0; k < quarter; k += 2) {
    const std::size_t i = insert_two_zeros(k, lo, hi) | cbit;
    const __m256d a = load2(data + i);
    const __m256d b = load2(data + (i | tbit));
    store2(data + i, b);
    store2(data + (i | tbit), a);
  }
}

void apply_cz(std::span<Amplitude> s, unsigned a, unsigned b) {
  if (a == 0 || b == 0) {
    scalar_kernels().apply_cz(s, a, b);
    return;
  }
  const unsigned lo = std::min(a, b), hi = std::max(a, b);
  const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
  const std::size_t quarter = s.size() / 4;
  const __m256d sign = _mm256_set1_pd(-0.0);
  Amplitude* data = s.data();
  for (std::size_t k = 0; k < quarter; k += 2) {
    Amplitude* p = data + (insert_two_zeros(k, lo, hi) | both);
    store2(p, _mm256_xor_pd(load2(p), sign));
  }
}

double prob_one(std::span<const Amplitude> s, unsigned q) {
  if (q == 0) return scalar_kernels().prob_one(s, q);
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t half = s.size() / 2;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = 0; k < half; k += 2) {
    const __m256d a = load2(s.data() + (insert_zero(k, q) | bit));
    acc = _mm256_fmadd_pd(a, a, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

void collapse(std::span<Amplitude> s, unsigned q, int outcome, double scale) {
  if (q == 0) {
    scalar_kernels().collapse(s, q, outcome, scale);
    return;
  }
  const std::size_t bit = std::size_t{1} << q;
  const __m256d keep = _mm256_set1_pd(scale);
  const __m256d drop = _mm256_setzero_pd();
  Amplitude* data = s.data();
  for (std::size_t i = 0; i < s.size(); i += 2) {
    const bool set = (i & bit) != 0;
    store2(data + i, _mm256_mul_pd(load2(data + i), set == (outcome != 0) ? keep : drop));
  }
}

constexpr Kernels kAvx2{apply_1q, apply_cx, apply_cz, prob_one, collapse};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

}  // namespace qdepth::sim
