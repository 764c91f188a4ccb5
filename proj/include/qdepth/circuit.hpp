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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdepth {

using Qubit = std::uint32_t;
using Clbit = std::uint32_t;

enum class GateKind : std::uint8_t { H, X, Y, Z, RX, RY, RZ, CX, CZ, Measure, Barrier };

/// Lower-case OpenQASM mnemonic ("h", "cx", "measure", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

constexpr bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}
constexpr bool is_two_qubit(GateKind k) { return k == GateKind::CX || k == GateKind::CZ; }
/// True for every kind that counts towards gate_count.
constexpr bool is_gate(GateKind k) { return k != GateKind::Measure && k != GateKind::Barrier; }

/// Apply the owning gate iff the XOR of the listed classical bits is 1.
struct Condition {
  std::vector<Clbit> bits;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Instruction {
  GateKind kind = GateKind::H;
  /// CX: {control, target}. CZ: {a, b}. Barrier: any number of qubits.
  std::vector<Qubit> qubits;
  std::optional<double> angle;
  std::optional<Clbit> clbit;
  std::optional<Condition> condition;

  static Instruction h(Qubit q) { return {GateKind::H, {q}, {}, {}, {}}; }
  static Instruction x(Qubit q) { return {GateKind::X, {q}, {}, {}, {}}; }
  static Instruction y(Qubit q) { return {GateKind::Y, {q}, {}, {}, {}}; }
  static Instruction z(Qubit q) { return {GateKind::Z, {q}, {}, {}, {}}; }
  static Instruction rx(Qubit q, double theta) { return {GateKind::RX, {q}, theta, {}, {}}; }
  static Instruction ry(Qubit q, double theta) { return {GateKind::RY, {q}, theta, {}, {}}; }
  static Instruction rz(Qubit q, double theta) { return {GateKind::RZ, {q}, theta, {}, {}}; }
  static Instruction cx(Qubit control, Qubit target) { return {GateKind::CX, {control, target}, {}, {}, {}}; }
  static Instruction cz(Qubit a, Qubit b) { return {GateKind::CZ, {a, b}, {}, {}, {}}; }
  static Instruction measure(Qubit q, Clbit c) { return {GateKind::Measure, {q}, std::nullopt, c, {}}; }
  static Instruction barrier(std::vector<Qubit> qs) { return {GateKind::Barrier, std::move(qs), {}, {}, {}}; }

  /// Copy of this instruction conditioned on the parity of `bits`.
  [[nodiscard]] Instruction if_parity(std::vector<Clbit> bits) const {
    Instruction out = *this;
    out.condition = Condition{std::move(bits)};
    return out;
  }

  [[nodiscard]] bool acts_on(Qubit q) const;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Named register in declaration order. Registers only matter for emission;
/// all indices inside the IR are flat.
struct Register {
  std::string name;
  std::uint32_t size = 0;

  friend bool operator==(const Register&, const Register&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::uint32_t num_qubits, std::uint32_t num_clbits = 0,
                   std::vector<Instruction> instructions = {});

  [[nodiscard]] std::uint32_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::uint32_t num_clbits() const { return num_clbits_; }
  [[nodiscard]] const std::vector<Instruction>& instructions() const { return instructions_; }
  [[nodiscard]] std::size_t size() const { return instructions_.size(); }
  [[nodiscard]] bool empty() const { return instructions_.empty(); }
  const Instruction& operator[](std::size_t i) const { return instructions_[i]; }

  Circuit& append(Instruction inst);
  Circuit& append(std::span<const Instruction> insts);

  /// Declares a fresh classical register and returns the index of its first bit.
  Clbit add_creg(std::string name, std::uint32_t size);

  /// Declared registers; when none were declared explicitly a single `q`/`c`
  /// register covering every index is reported.
  [[nodiscard]] std::vector<Register> qregs() const;
  [[nodiscard]] std::vector<Register> cregs() const;
  void set_registers(std::vector<Register> qregs, std::vector<Register> cregs);

  /// Same declarations, different body.
  [[nodiscard]] Circuit with_instructions(std::vector<Instruction> instructions) const;

  /// Equality ignores register names: two circuits are equal when their flat
  /// index spaces and instruction lists match.
  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.num_clbits_ == b.num_clbits_ &&
           a.instructions_ == b.instructions_;
  }

 private:
  std::uint32_t num_qubits_ = 0;
  std::uint32_t num_clbits_ = 0;
  std::vector<Instruction> instructions_;
  std::vector<Register> qregs_;
  std::vector<Register> cregs_;
};

struct Violation {
  std::optional<std::size_t> index;  ///< offending instruction, if any
  std::string message;
};

/// Every invariant violation in `c`; empty means the circuit is well formed.
std::vector<Violation> validate(const Circuit& c);

/// Half-open instruction range [begin, end).
struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Incremental ASAP scheduler: feed instructions in program order and read
/// the current depth at any point. Copyable, so a shared prefix can be
/// scheduled once and then continued along two different suffixes.
class DepthTracker {
 public:
  DepthTracker(std::uint32_t num_qubits, std::uint32_t num_clbits)
      : qubit_layer_(num_qubits, 0), clbit_layer_(num_clbits, 0) {}

  void add(const Instruction& inst);
  void add(std::span<const Instruction> insts) {
    for (const Instruction& inst : insts) add(inst);
  }
  [[nodiscard]] std::size_t depth() const { return depth_; }
  /// Layer of the last scheduled instruction on `q`.
  [[nodiscard]] std::size_t layer(Qubit q) const { return qubit_layer_[q]; }

 private:
  std::vector<std::size_t> qubit_layer_;
  std::vector<std::size_t> clbit_layer_;
  std::size_t depth_ = 0;
};

/// ASAP layer count. An instruction lands one layer after the latest earlier
/// instruction that shares a qubit with it, wrote a bit of its condition, or
/// wrote its own clbit. Barriers order their qubits but occupy no layer.
/// With a window, only instructions inside it are scheduled (from an empty
/// frontier). Throws std::out_of_range for a window outside the circuit.
std::size_t depth(const Circuit& c, std::optional<Window> window = std::nullopt);
std::size_t depth(std::span<const Instruction> insts, std::uint32_t num_qubits,
                  std::uint32_t num_clbits);

struct DepthReport {
  std::size_t depth = 0;
  std::size_t gate_count = 0;
  std::size_t two_qubit_count = 0;
  std::size_t measure_count = 0;

  friend bool operator==(const DepthReport&, const DepthReport&) = default;
};

/// Throws std::invalid_argument when validate() reports anything.
DepthReport stats(const Circuit& c);

/// Deletes the instructions at `remove`, then inserts `replacement`
/// contiguously at position `insert_at` of the shortened list.
/// Throws std::out_of_range on bad indices.
Circuit splice(const Circuit& c, std::span<const std::size_t> remove, std::size_t insert_at,
               std::span<const Instruction> replacement);

std::string to_string(const Instruction& inst);

}  // namespace qdepth
