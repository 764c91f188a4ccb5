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
#include <optional>
#include <span>
#include <vector>

#include "qdepth/circuit.hpp"

namespace qdepth {

/// True when applying `a` then `b` equals applying `b` then `a`, judged from
/// the Pauli axis each instruction acts along on every shared qubit.
/// Measurements and barriers commute only with instructions they share
/// neither qubits nor classical bits with. Sound but not complete.
bool commutes(const Instruction& a, const Instruction& b);

enum class ChainKind { ForwardCx, ReverseCx, Cz };

const char* to_string(ChainKind kind);

/// A maximal chain found by ChainScanner. For CX kinds every gate is
/// CX(sequence[i], sequence[i+1]); for CZ it is CZ on that pair. Indices
/// refer to the scanner's current circuit.
struct ChainCandidate {
  ChainKind kind = ChainKind::ForwardCx;
  std::vector<Qubit> sequence;
  std::vector<std::size_t> gate_indices;
  std::vector<std::size_t> moved_before;  ///< interleaved ops hoisted above the chain
  std::vector<std::size_t> moved_after;   ///< interleaved ops sunk below the chain

  [[nodiscard]] std::size_t gate_count() const { return gate_indices.size(); }
  [[nodiscard]] std::size_t start_index() const { return gate_indices.front(); }
  [[nodiscard]] std::size_t last_index() const { return gate_indices.back(); }
};

enum class Disposition { Extend, MoveBefore, MoveAfter, Break };

const char* to_string(Disposition d);

/// The chain as it stands while the scanner looks at a later instruction.
struct ChainView {
  ChainKind kind = ChainKind::ForwardCx;
  std::span<const Qubit> sequence;
  std::span<const Instruction> gates;
  std::span<const Instruction> moved_after;
};

/// Decides what to do with `op`, found after the chain's current last gate.
/// `processed` ops (already part of an earlier chain) never extend.
Disposition classify_interleaved(const Instruction& op, const ChainView& chain,
                                 bool processed = false);

/// Plain chain CX(s0,s1), CX(s1,s2), ... in program order.
std::vector<Instruction> chain_gates(ChainKind kind, std::span<const Qubit> sequence);

/// Log-depth rewrite of a CX chain. Layer A folds every unanchored position
/// into its skeleton neighbour, the skeleton is rewritten recursively, and
/// layer B pushes the skeleton prefixes back out. Depth 2 per level and at
/// most 2(n-1) gates. The forward variant anchors the skeleton at s0, the
/// reverse variant at the last qubit.
std::vector<Instruction> decompose_forward(std::span<const Qubit> sequence);
std::vector<Instruction> decompose_reverse(std::span<const Qubit> sequence);

/// CZ chain as two layers: even pairs, then odd pairs.
std::vector<Instruction> decompose_cz(std::span<const Qubit> sequence);

/// CZ chain in the CX basis: H on odd positions, CX into odd positions from
/// their even neighbours, H again. Depth 4.
std::vector<Instruction> decompose_cz_to_cx(std::span<const Qubit> sequence);

inline constexpr std::size_t kDefaultLookahead = 128;

/// Walks a circuit yielding chain candidates in program order. The caller
/// answers every candidate with apply() or skip(); calling next() without
/// an answer counts as skip().
class ChainScanner {
 public:
  explicit ChainScanner(Circuit c, std::size_t lookahead = kDefaultLookahead);

  std::optional<ChainCandidate> next();

  /// Instructions that replace [start_index, last_index] when the chain
  /// gates are rewritten as `chain`: hoisted ops, `chain`, sunk ops.
  [[nodiscard]] std::vector<Instruction> window(const ChainCandidate& cand,
                                                std::span<const Instruction> chain) const;

  /// Splices window(cand, chain) into the circuit. The new chain gates are
  /// never scanned again; scanning resumes at the window start.
  void apply(const ChainCandidate& cand, std::span<const Instruction> chain);
  void skip();

  [[nodiscard]] const std::vector<Instruction>& instructions() const { return insts_; }
  [[nodiscard]] Circuit circuit() const { return base_.with_instructions(insts_); }

 private:
  std::optional<ChainCandidate> grow(std::size_t seed);

  Circuit base_;
  std::vector<Instruction> insts_;
  std::vector<bool> processed_;
  std::size_t lookahead_;
  std::size_t cursor_ = 0;
  std::optional<std::size_t> pending_;
};

}  // namespace qdepth
