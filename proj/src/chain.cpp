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

#include "qdepth/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdepth {

namespace {

void require_chain(std::span<const Qubit> seq) {
  if (seq.size() < 2) throw std::invalid_argument("chain needs at least two qubits");
}

void prefix_into(std::vector<Instruction>& out, std::span<const Qubit> seq, bool anchor_end) {
  const std::size_t n = seq.size();
  if (n < 5) {
    for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(Instruction::cx(seq[i], seq[i + 1]));
    return;
  }
  const std::size_t parity = anchor_end ? (n - 1) % 2 : 0;
  std::vector<Qubit> skeleton;
  for (std::size_t i = parity; i < n; i += 2) skeleton.push_back(seq[i]);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i % 2 != parity) out.push_back(Instruction::cx(seq[i], seq[i + 1]));
  }
  prefix_into(out, skeleton, anchor_end);
  for (std::size_t i = parity; i + 1 < n; i += 2) out.push_back(Instruction::cx(seq[i], seq[i + 1]));
}

bool commutes_with_all(const Instruction& op, std::span<const Instruction> others) {
  return std::all_of(others.begin(), others.end(),
                     [&](const Instruction& o) { return commutes(op, o); });
}

// The qubit `op` would add to the chain, if it has the right shape.
std::optional<Qubit> extension(const Instruction& op, const ChainView& chain) {
  const Qubit tail = chain.sequence.back();
  if (chain.kind == ChainKind::Cz) {
    if (op.kind != GateKind::CZ) return std::nullopt;
    if (op.qubits[0] == tail) return op.qubits[1];
    if (op.qubits[1] == tail) return op.qubits[0];
    return std::nullopt;
  }
  if (op.kind != GateKind::CX || op.qubits[0] != tail) return std::nullopt;
  return op.qubits[1];
}

bool z_axis_on(const Instruction& op, Qubit q) {
  switch (op.kind) {
    case GateKind::Z:
    case GateKind::RZ:
    case GateKind::CZ:
      return true;
    case GateKind::CX:
      return op.qubits[0] == q;
    default:
      return false;
  }
}

}  // namespace

const char* to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::ForwardCx:
      return "forward_cx";
    case ChainKind::ReverseCx:
      return "reverse_cx";
    case ChainKind::Cz:
      return "cz";
  }
  return "?";
}

const char* to_string(Disposition d) {
  switch (d) {
    case Disposition::Extend:
      return "extend";
    case Disposition::MoveBefore:
      return "move_before";
    case Disposition::MoveAfter:
      return "move_after";
    case Disposition::Break:
      return "break_chain";
  }
  return "?";
}

Disposition classify_interleaved(const Instruction& op, const ChainView& chain, bool processed) {
  if (op.kind == GateKind::Barrier || op.kind == GateKind::Measure || op.condition) {
    return Disposition::Break;
  }
  if (!processed) {
    if (auto q = extension(op, chain)) {
      const bool fresh =
          std::find(chain.sequence.begin(), chain.sequence.end(), *q) == chain.sequence.end();
      if (fresh && commutes_with_all(op, chain.moved_after)) return Disposition::Extend;
    }
  }
  if (commutes_with_all(op, chain.gates) && commutes_with_all(op, chain.moved_after)) {
    return Disposition::MoveBefore;
  }
  const Qubit tail = chain.sequence.back();
  if (!op.acts_on(tail) || z_axis_on(op, tail)) return Disposition::MoveAfter;
  return Disposition::Break;
}

std::vector<Instruction> chain_gates(ChainKind kind, std::span<const Qubit> sequence) {
  require_chain(sequence);
  std::vector<Instruction> out;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    out.push_back(kind == ChainKind::Cz ? Instruction::cz(sequence[i], sequence[i + 1])
                                        : Instruction::cx(sequence[i], sequence[i + 1]));
  }
  return out;
}

std::vector<Instruction> decompose_forward(std::span<const Qubit> sequence) {
  require_chain(sequence);
  std::vector<Instruction> out;
  prefix_into(out, sequence, false);
  return out;
}

std::vector<Instruction> decompose_reverse(std::span<const Qubit> sequence) {
  require_chain(sequence);
  std::vector<Instruction> out;
  prefix_into(out, sequence, true);
  return out;
}

std::vector<Instruction> decompose_cz(std::span<const Qubit> sequence) {
  require_chain(sequence);
  std::vector<Instruction> out;
  for (std::size_t start : {0, 1}) {
    for (std::size_t i = start; i + 1 < sequence.size(); i += 2) {
      out.push_back(Instruction::cz(sequence[i], sequence[i + 1]));
    }
  }
  return out;
}

std::vector<Instruction> decompose_cz_to_cx(std::span<const Qubit> sequence) {
  require_chain(sequence);
  const std::size_t n = sequence.size();
  std::vector<Instruction> out;
  for (std::size_t i = 1; i < n; i += 2) out.push_back(Instruction::h(sequence[i]));
  for (std::size_t i = 0; i + 1 < n; i += 2) out.push_back(Instruction::cx(sequence[i], sequence[i + 1]));
  for (std::size_t i = 1; i + 1 < n; i += 2) out.push_back(Instruction::cx(sequence[i + 1], sequence[i]));
  for (std::size_t i = 1; i < n; i += 2) out.push_back(Instruction::h(sequence[i]));
  return out;
}

ChainScanner::ChainScanner(Circuit c, std::size_t lookahead)
    : base_(c.with_instructions({})),
      insts_(c.instructions()),
      processed_(insts_.size(), false),
      lookahead_(lookahead) {}

std::optional<ChainCandidate> ChainScanner::grow(std::size_t seed) {
  const Instruction& first = insts_[seed];
  ChainCandidate cand;
  cand.sequence = {first.qubits[0], first.qubits[1]};
  cand.kind = first.kind == GateKind::CZ            ? ChainKind::Cz
              : first.qubits[1] < first.qubits[0] ? ChainKind::ReverseCx
                                                   : ChainKind::ForwardCx;
  cand.gate_indices = {seed};
  std::vector<Instruction> gates{first};
  std::vector<Instruction> after;

  for (std::size_t j = seed + 1; j < insts_.size() && j - cand.last_index() <= lookahead_; ++j) {
    const Instruction& op = insts_[j];
    const ChainView view{cand.kind, cand.sequence, gates, after};
    switch (classify_interleaved(op, view, processed_[j])) {
      case Disposition::Extend:
        cand.sequence.push_back(op.qubits[0] == cand.sequence.back() ? op.qubits[1] : op.qubits[0]);
        cand.gate_indices.push_back(j);
        gates.push_back(op);
        break;
      case Disposition::MoveBefore:
        cand.moved_before.push_back(j);
        break;
      case Disposition::MoveAfter:
        cand.moved_after.push_back(j);
        after.push_back(op);
        break;
      case Disposition::Break:
        j = insts_.size() - 1;  // ends the scan
        break;
    }
  }

  const std::size_t last = cand.last_index();
  std::erase_if(cand.moved_before, [&](std::size_t i) { return i > last; });
  std::erase_if(cand.moved_after, [&](std::size_t i) { return i > last; });
  if (cand.gate_count() < 2) return std::nullopt;
  return cand;
}

std::optional<ChainCandidate> ChainScanner::next() {
  if (pending_) skip();
  for (; cursor_ < insts_.size(); ++cursor_) {
    const Instruction& op = insts_[cursor_];
    if (processed_[cursor_] || op.condition || !is_two_qubit(op.kind)) continue;
    if (auto cand = grow(cursor_)) {
      for (std::size_t i : cand->gate_indices) processed_[i] = true;
      pending_ = cand->start_index();
      return cand;
    }
  }
  return std::nullopt;
}

std::vector<Instruction> ChainScanner::window(const ChainCandidate& cand,
                                              std::span<const Instruction> chain) const {
  std::vector<Instruction> out;
  out.reserve(cand.moved_before.size() + chain.size() + cand.moved_after.size());
  for (std::size_t i : cand.moved_before) out.push_back(insts_[i]);
  out.insert(out.end(), chain.begin(), chain.end());
  for (std::size_t i : cand.moved_after) out.push_back(insts_[i]);
  return out;
}

void ChainScanner::apply(const ChainCandidate& cand, std::span<const Instruction> chain) {
  const std::size_t start = cand.start_index();
  const std::size_t stop = cand.last_index() + 1;
  if (stop > insts_.size()) throw std::out_of_range("chain candidate outside circuit");

  std::vector<Instruction> repl;
  std::vector<bool> flags;
  repl.reserve(stop - start + chain.size());
  for (std::size_t i : cand.moved_before) {
    repl.push_back(std::move(insts_[i]));
    flags.push_back(processed_[i]);
  }
  for (const Instruction& g : chain) {
    repl.push_back(g);
    flags.push_back(true);
  }
  for (std::size_t i : cand.moved_after) {
    repl.push_back(std::move(insts_[i]));
    flags.push_back(processed_[i]);
  }

  const auto first = insts_.begin() + static_cast<std::ptrdiff_t>(start);
  insts_.erase(first, insts_.begin() + static_cast<std::ptrdiff_t>(stop));
  insts_.insert(insts_.begin() + static_cast<std::ptrdiff_t>(start),
                std::make_move_iterator(repl.begin()), std::make_move_iterator(repl.end()));
  const auto pfirst = processed_.begin() + static_cast<std::ptrdiff_t>(start);
  processed_.erase(pfirst, processed_.begin() + static_cast<std::ptrdiff_t>(stop));
  processed_.insert(processed_.begin() + static_cast<std::ptrdiff_t>(start), flags.begin(),
                    flags.end());
  cursor_ = start;
  pending_.reset();
}

void ChainScanner::skip() {
  if (pending_) cursor_ = *pending_ + 1;
  pending_.reset();
}

}  // namespace qdepth
