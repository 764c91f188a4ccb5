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
#include <cmath>
#include <numbers>

#include "qdepth/chain.hpp"

namespace qdepth {

namespace {

enum class Axis { Identity, X, Y, Z, H, Opaque };

bool is_trivial_rotation(double theta) {
  const double r = std::remainder(theta, 2 * std::numbers::pi);
  return std::abs(r) < 1e-12;
}

Axis axis_on(const Instruction& inst, Qubit q) {
  switch (inst.kind) {
    case GateKind::H:
      return Axis::H;
    case GateKind::X:
      return Axis::X;
    case GateKind::Y:
      return Axis::Y;
    case GateKind::Z:
    case GateKind::CZ:
      return Axis::Z;
    case GateKind::RX:
      return is_trivial_rotation(*inst.angle) ? Axis::Identity : Axis::X;
    case GateKind::RY:
      return is_trivial_rotation(*inst.angle) ? Axis::Identity : Axis::Y;
    case GateKind::RZ:
      return is_trivial_rotation(*inst.angle) ? Axis::Identity : Axis::Z;
    case GateKind::CX:
      return inst.qubits[0] == q ? Axis::Z : Axis::X;
    case GateKind::Measure:
    case GateKind::Barrier:
      return Axis::Opaque;
  }
  return Axis::Opaque;
}

bool reads(const Instruction& inst, Clbit b) {
  if (!inst.condition) return false;
  const auto& bits = inst.condition->bits;
  return std::find(bits.begin(), bits.end(), b) != bits.end();
}

bool classical_conflict(const Instruction& a, const Instruction& b) {
  if (a.clbit && (reads(b, *a.clbit) || b.clbit == a.clbit)) return true;
  if (b.clbit && reads(a, *b.clbit)) return true;
  return false;
}

}  // namespace

bool commutes(const Instruction& a, const Instruction& b) {
  if (classical_conflict(a, b)) return false;
  for (Qubit q : a.qubits) {
    if (!b.acts_on(q)) continue;
    const Axis x = axis_on(a, q);
    const Axis y = axis_on(b, q);
    if (x == Axis::Opaque || y == Axis::Opaque) return false;
    if (x == Axis::Identity || y == Axis::Identity) continue;
    if (x != y) return false;
  }
  return true;
}

}  // namespace qdepth
