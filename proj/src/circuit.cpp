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

#include "qdepth/circuit.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace qdepth {

namespace {

constexpr std::array<std::string_view, 11> kNames = {"h",  "x",  "y",  "z",  "rx",      "ry",
                                                     "rz", "cx", "cz", "measure", "barrier"};

std::size_t arity(GateKind k) {
  if (is_two_qubit(k)) return 2;
  if (k == GateKind::Barrier) return 0;  // variadic
  return 1;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

bool Instruction::acts_on(Qubit q) const {
  return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
}

Circuit::Circuit(std::uint32_t num_qubits, std::uint32_t num_clbits,
                 std::vector<Instruction> instructions)
    : num_qubits_(num_qubits), num_clbits_(num_clbits), instructions_(std::move(instructions)) {}

Circuit& Circuit::append(Instruction inst) {
  instructions_.push_back(std::move(inst));
  return *this;
}

Circuit& Circuit::append(std::span<const Instruction> insts) {
  instructions_.insert(instructions_.end(), insts.begin(), insts.end());
  return *this;
}

Clbit Circuit::add_creg(std::string name, std::uint32_t size) {
  if (cregs_.empty() && num_clbits_ > 0) cregs_.push_back({"c", num_clbits_});
  const Clbit first = num_clbits_;
  cregs_.push_back({std::move(name), size});
  num_clbits_ += size;
  return first;
}

std::vector<Register> Circuit::qregs() const {
  if (!qregs_.empty()) return qregs_;
  return {{"q", num_qubits_}};
}

std::vector<Register> Circuit::cregs() const {
  if (!cregs_.empty()) return cregs_;
  if (num_clbits_ == 0) return {};
  return {{"c", num_clbits_}};
}

void Circuit::set_registers(std::vector<Register> qregs, std::vector<Register> cregs) {
  qregs_ = std::move(qregs);
  cregs_ = std::move(cregs);
}

Circuit Circuit::with_instructions(std::vector<Instruction> instructions) const {
  Circuit out = *this;
  out.instructions_ = std::move(instructions);
  return out;
}

std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  std::vector<bool> written(c.num_clbits(), false);
  const auto& insts = c.instructions();
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const Instruction& inst = insts[i];
    auto report = [&](std::string msg) { out.push_back({i, std::move(msg)}); };

    const std::size_t want = arity(inst.kind);
    if (want != 0 && inst.qubits.size() != want) report("wrong number of qubit operands");
    if (inst.kind == GateKind::Barrier && inst.qubits.empty()) report("barrier without operands");

    for (std::size_t a = 0; a < inst.qubits.size(); ++a) {
      if (inst.qubits[a] >= c.num_qubits()) report("qubit index out of range");
      for (std::size_t b = a + 1; b < inst.qubits.size(); ++b) {
        if (inst.qubits[a] == inst.qubits[b]) report("duplicate operand");
      }
    }

    if (is_rotation(inst.kind) != inst.angle.has_value()) {
      report(is_rotation(inst.kind) ? "rotation without angle" : "angle on non-rotation gate");
    }

    if (inst.kind == GateKind::Measure) {
      if (!inst.clbit) {
        report("measure without classical bit");
      } else if (*inst.clbit >= c.num_clbits()) {
        report("clbit index out of range");
      } else if (written[*inst.clbit]) {
        report("clbit reassignment");
      } else {
        written[*inst.clbit] = true;
      }
      if (inst.condition) report("measure cannot be conditioned");
    } else if (inst.clbit) {
      report("clbit on non-measure instruction");
    }

    if (inst.condition) {
      if (inst.kind == GateKind::Barrier) report("barrier cannot be conditioned");
      if (inst.condition->bits.empty()) report("empty condition");
      for (Clbit b : inst.condition->bits) {
        if (b >= c.num_clbits()) report("condition clbit index out of range");
      }
    }
  }
  return out;
}

void DepthTracker::add(const Instruction& inst) {
  std::size_t ready = 0;
  for (Qubit q : inst.qubits) ready = std::max(ready, qubit_layer_[q]);
  if (inst.kind == GateKind::Barrier) {
    for (Qubit q : inst.qubits) qubit_layer_[q] = ready;
    return;
  }
  if (inst.condition) {
    for (Clbit b : inst.condition->bits) ready = std::max(ready, clbit_layer_[b]);
  }
  if (inst.clbit) ready = std::max(ready, clbit_layer_[*inst.clbit]);
  const std::size_t layer = ready + 1;
  for (Qubit q : inst.qubits) qubit_layer_[q] = layer;
  if (inst.clbit) clbit_layer_[*inst.clbit] = layer;
  depth_ = std::max(depth_, layer);
}

std::size_t depth(std::span<const Instruction> insts, std::uint32_t num_qubits,
                  std::uint32_t num_clbits) {
  DepthTracker t(num_qubits, num_clbits);
  t.add(insts);
  return t.depth();
}

std::size_t depth(const Circuit& c, std::optional<Window> window) {
  const auto& insts = c.instructions();
  Window w = window.value_or(Window{0, insts.size()});
  if (w.begin > w.end || w.end > insts.size()) throw std::out_of_range("depth: invalid window");
  return depth(std::span(insts).subspan(w.begin, w.end - w.begin), c.num_qubits(),
               c.num_clbits());
}

DepthReport stats(const Circuit& c) {
  if (auto v = validate(c); !v.empty()) {
    throw std::invalid_argument("stats: invalid circuit: " + v.front().message);
  }
  DepthReport r;
  r.depth = depth(c);
  for (const Instruction& inst : c.instructions()) {
    if (inst.kind == GateKind::Measure) {
      ++r.measure_count;
    } else if (inst.kind != GateKind::Barrier) {
      ++r.gate_count;
      if (is_two_qubit(inst.kind)) ++r.two_qubit_count;
    }
  }
  return r;
}

Circuit splice(const Circuit& c, std::span<const std::size_t> remove, std::size_t insert_at,
               std::span<const Instruction> replacement) {
  const auto& insts = c.instructions();
  std::vector<bool> drop(insts.size(), false);
  for (std::size_t i : remove) {
    if (i >= insts.size()) throw std::out_of_range("splice: remove index out of range");
    drop[i] = true;
  }
  std::vector<Instruction> kept;
  kept.reserve(insts.size() + replacement.size());
  for (std::size_t i = 0; i < insts.size(); ++i) {
    if (!drop[i]) kept.push_back(insts[i]);
  }
  if (insert_at > kept.size()) throw std::out_of_range("splice: insert position out of range");
  kept.insert(kept.begin() + static_cast<std::ptrdiff_t>(insert_at), replacement.begin(),
              replacement.end());
  return c.with_instructions(std::move(kept));
}

std::string to_string(const Instruction& inst) {
  std::ostringstream os;
  if (inst.condition) {
    os << "if(";
    for (std::size_t i = 0; i < inst.condition->bits.size(); ++i) {
      os << (i ? "^" : "") << "c" << inst.condition->bits[i];
    }
    os << ") ";
  }
  os << gate_name(inst.kind);
  if (inst.angle) os << "(" << *inst.angle << ")";
  for (std::size_t i = 0; i < inst.qubits.size(); ++i) {
    os << (i ? "," : " ") << "q" << inst.qubits[i];
  }
  if (inst.clbit) os << " -> c" << *inst.clbit;
  return os.str();
}

}  // namespace qdepth
