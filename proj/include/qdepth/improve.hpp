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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdepth/chain.hpp"
#include "qdepth/circuit.hpp"
#include "qdepth/ghz.hpp"

namespace qdepth {

enum class ChainMode { Off, Conservative, Always, Fast };

enum class Transformation { Forward, Reverse, Cz, CzToCx };

const char* to_string(ChainMode mode);
const char* to_string(Transformation t);

struct PassConfig {
  GhzMode ghz_mode = GhzMode::Robust;
  ChainMode chain_mode = ChainMode::Conservative;
  std::size_t min_chain_gates = 5;
  std::size_t depth_scope = 100;
  bool cz_to_cx = false;
  bool verify = false;
  std::uint32_t max_verify_qubits = 10;
  std::size_t lookahead = kDefaultLookahead;
};

/// Throws std::invalid_argument when a field is out of range.
void check(const PassConfig& config);

/// Candidate rewrites in preference order.
std::vector<Transformation> transformations(ChainKind kind, bool cz_to_cx);

std::vector<Instruction> decompose(Transformation t, std::span<const Qubit> sequence);

using Decomposer = std::function<std::vector<Instruction>(Transformation, std::span<const Qubit>)>;

struct GateDecision {
  ChainCandidate candidate;
  std::optional<Transformation> transformation;
  std::optional<std::size_t> depth_before;  ///< empty when no depth was evaluated
  std::optional<std::size_t> depth_after;
  bool applied = false;
};

struct VerificationFailure {
  std::size_t decision = 0;  ///< index into the decision list
  std::size_t start_index = 0;
  std::string message;
};

struct ChainPassResult {
  Circuit circuit;
  std::vector<GateDecision> decisions;
  std::size_t chains_applied = 0;
  std::size_t depth_evaluations = 0;
  std::optional<VerificationFailure> failure;
};

/// Schedules [start_index, last_index + scope], clamped to the circuit end,
/// from an empty frontier and returns the latest layer reached by any qubit
/// of the chain. Unrelated work in the window does not mask a shallower
/// chain.
std::size_t scoped_depth(const Circuit& c, const ChainCandidate& cand, std::size_t scope);

/// Scans `c` for chains and rewrites them according to config.chain_mode.
/// Conservative mode applies the best rewrite only if it lowers the scoped
/// depth and does not raise the depth of the whole circuit. On a failed
/// window check the input circuit is returned with `failure` set.
ChainPassResult gate_and_apply(const Circuit& c, const PassConfig& config,
                               const Decomposer& decomposer = {});

}  // namespace qdepth
