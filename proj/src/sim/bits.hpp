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

#include <cstddef>

namespace qdepth::sim::detail {

/// Spreads `k` so that a zero bit appears at position `pos`.
inline std::size_t insert_zero(std::size_t k, unsigned pos) {
  const std::size_t low = k & ((std::size_t{1} << pos) - 1);
  return ((k >> pos) << (pos + 1)) | low;
}

/// insert_zero at two distinct positions, lower one first.
inline std::size_t insert_two_zeros(std::size_t k, unsigned lo, unsigned hi) {
  return insert_zero(insert_zero(k, lo), hi);
}

}  // namespace qdepth::sim::detail
