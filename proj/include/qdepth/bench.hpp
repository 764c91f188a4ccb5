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

#include <cstdint>
#include <optional>
#include <string_view>

#include "qdepth/circuit.hpp"

namespace qdepth {

/// Identifier of the angle stream, written into benchmark CSV headers.
inline constexpr std::string_view kRngId = "mt19937_64";

enum class Direction { Forward, Reverse };

Circuit gen_ghz_standard(std::uint32_t n);
Circuit gen_cx_chain(std::uint32_t n, Direction direction);
Circuit gen_cz_chain(std::uint32_t n);

/// `n_chains` forward chains of `chain_len` gates on disjoint qubits, issued
/// round-robin one gate per chain.
Circuit gen_intertwined(std::uint32_t n_chains, std::uint32_t chain_len);

enum class AnsatzFamily { EfficientSu2, RealAmplitudes, TwoLocal };
enum class Entanglement { Linear, ReverseLinear, Circular, Sca, Full };

std::string_view to_string(AnsatzFamily f);
std::string_view to_string(Entanglement e);
std::optional<AnsatzFamily> family_from_string(std::string_view s);
std::optional<Entanglement> entanglement_from_string(std::string_view s);

struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::RealAmplitudes;
  std::uint32_t n = 2;
  std::uint32_t reps = 1;
  Entanglement entanglement = Entanglement::Linear;
  std::uint64_t seed = 0;
};

/// `reps` blocks of rotations and entanglers, then a final rotation layer.
/// EfficientSU2 rotates with RY then RZ, the other families with RY.
/// TwoLocal entangles with CZ, the other families with CX. Angles are
/// uniform in [0, 2pi), drawn in emission order from kRngId seeded by
/// `seed`.
Circuit gen_ansatz(const AnsatzSpec& spec);

}  // namespace qdepth
