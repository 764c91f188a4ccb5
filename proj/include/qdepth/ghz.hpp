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
#include <span>
#include <vector>

#include "qdepth/circuit.hpp"

namespace qdepth {

enum class GhzMode { Off, Robust, Parallel };
enum class GhzShape { Chain, Fanout };

/// A GHZ preparation found in a circuit: a Hadamard on a fresh root followed
/// by CX gates that copy it onto fresh qubits, either as a chain (each
/// control is the previous target) or a fan-out (every control is the root).
struct GhzSite {
  std::size_t hadamard_index = 0;
  Qubit root = 0;
  std::vector<Qubit> members;  ///< root first, then targets in program order
  std::vector<std::size_t> gate_indices;
  GhzShape shape = GhzShape::Chain;
};

std::vector<GhzSite> detect_ghz(const Circuit& c);

/// H then a linear CX chain over `members`; depth n.
std::vector<Instruction> build_ghz_standard(std::span<const Qubit> members);

/// Doubling tree: after the H, level d copies every reached member i onto
/// i + 2^d. Depth 1 + ceil(log2 n), n gates.
std::vector<Instruction> build_ghz_log(std::span<const Qubit> members);

/// Number of measurements build_ghz_parallel performs for n members.
constexpr std::size_t ghz_parallel_measurements(std::size_t n) { return n / 2; }

/// Constant-depth fusion scheme. Even positions are data qubits (Hadamard),
/// odd positions are fusion qubits that collect the parity of their two
/// neighbouring data qubits and are measured. With an even member count the
/// last fusion qubit closes a ring back to position 0, so every measured
/// parity is shared by two data qubits. Data qubits are then corrected by the
/// prefix parity of the outcomes before them, fusion qubits are reset by
/// their own outcome and re-entangled from their left neighbour.
/// Needs n >= 3 and exactly ghz_parallel_measurements(n) fresh clbits.
std::vector<Instruction> build_ghz_parallel(std::span<const Qubit> members,
                                            std::span<const Clbit> fresh_clbits);

struct GhzPassResult {
  Circuit circuit;
  std::vector<GhzSite> sites;
  std::size_t replaced = 0;
};

/// Replaces detected sites in place. Robust mode uses the logarithmic
/// builder and keeps a site only if the whole circuit does not get deeper.
/// Parallel mode replaces every site, allocating one fresh single-bit
/// register `m<k>` per measurement, and falls back to the logarithmic
/// builder for two-member sites.
GhzPassResult apply_ghz_pass(const Circuit& c, GhzMode mode);

}  // namespace qdepth
