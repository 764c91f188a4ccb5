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

#include "qdepth/improve.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdepth/sim/oracle.hpp"

namespace qdepth {

namespace {

constexpr double kVerifyTolerance = 1e-9;

std::size_t scope_end(std::size_t size, const ChainCandidate& cand, std::size_t scope) {
  const std::size_t last = cand.last_index();
  return scope >= size - last ? size : last + scope + 1;
}

std::size_t chain_layer(const DepthTracker& t, std::span<const Qubit> sequence) {
  std::size_t out = 0;
  for (Qubit q : sequence) out = std::max(out, t.layer(q));
  return out;
}

std::uint32_t qubit_span(std::span<const Instruction> a, std::span<const Instruction> b,
                         std::uint32_t num_qubits) {
  std::vector<bool> seen(num_qubits, false);
  std::uint32_t count = 0;
  for (auto list : {a, b}) {
    for (const Instruction& inst : list) {
      for (Qubit q : inst.qubits) {
        if (!seen[q]) {
          seen[q] = true;
          ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace

const char* to_string(ChainMode mode) {
  switch (mode) {
    case ChainMode::Off:
      return "off";
    case ChainMode::Conservative:
      return "conservative";
    case ChainMode::Always:
      return "always";
    case ChainMode::Fast:
      return "fast";
  }
  return "?";
}

const char* to_string(Transformation t) {
  switch (t) {
    case Transformation::Forward:
      return "forward";
    case Transformation::Reverse:
      return "reverse";
    case Transformation::Cz:
      return "cz";
    case Transformation::CzToCx:
      return "cz_to_cx";
  }
  return "?";
}

void check(const PassConfig& config) {
  if (config.min_chain_gates < 2) throw std::invalid_argument("min_chain_gates must be at least 2");
  if (config.lookahead == 0) throw std::invalid_argument("lookahead must be positive");
}

std::vector<Transformation> transformations(ChainKind kind, bool cz_to_cx) {
  switch (kind) {
    case ChainKind::ForwardCx:
      return {Transformation::Forward, Transformation::Reverse};
    case ChainKind::ReverseCx:
      return {Transformation::Reverse, Transformation::Forward};
    case ChainKind::Cz:
      return {cz_to_cx ? Transformation::CzToCx : Transformation::Cz};
  }
  return {};
}

std::vector<Instruction> decompose(Transformation t, std::span<const Qubit> sequence) {
  switch (t) {
    case Transformation::Forward:
      return decompose_forward(sequence);
    case Transformation::Reverse:
      return decompose_reverse(sequence);
    case Transformation::Cz:
      return decompose_cz(sequence);
    case Transformation::CzToCx:
      return decompose_cz_to_cx(sequence);
  }
  return {};
}

std::size_t scoped_depth(const Circuit& c, const ChainCandidate& cand, std::size_t scope) {
  if (cand.gate_indices.empty() || cand.last_index() >= c.size()) {
    throw std::out_of_range("scoped_depth: candidate outside circuit");
  }
  const auto window = std::span(c.instructions())
                          .subspan(cand.start_index(), scope_end(c.size(), cand, scope) - cand.start_index());
  DepthTracker t(c.num_qubits(), c.num_clbits());
  t.add(window);
  return chain_layer(t, cand.sequence);
}

ChainPassResult gate_and_apply(const Circuit& c, const PassConfig& config,
                               const Decomposer& decomposer) {
  check(config);
  ChainPassResult result{c, {}, 0, 0, std::nullopt};
  if (config.chain_mode == ChainMode::Off) return result;

  const Decomposer& rewrite = decomposer ? decomposer : Decomposer(decompose);
  const std::uint32_t nq = c.num_qubits();
  const std::uint32_t nc = c.num_clbits();
  ChainScanner scanner(c, config.lookahead);

  while (auto cand = scanner.next()) {
    GateDecision& decision = result.decisions.emplace_back();
    decision.candidate = *cand;
    if (cand->gate_count() < config.min_chain_gates) continue;

    const auto& insts = scanner.instructions();
    const std::size_t start = cand->start_index();
    const std::size_t last = cand->last_index();
    const auto tail = std::span(insts).subspan(last + 1);
    const auto scoped_tail = tail.first(scope_end(insts.size(), *cand, config.depth_scope) - last - 1);

    std::optional<std::vector<Instruction>> chosen;
    if (config.chain_mode == ChainMode::Fast) {
      const Transformation t = transformations(cand->kind, config.cz_to_cx).front();
      decision.transformation = t;
      chosen = rewrite(t, cand->sequence);
    } else {
      DepthTracker base(nq, nc);
      base.add(std::span(insts).subspan(start, last + 1 - start));
      base.add(scoped_tail);
      const std::size_t before = chain_layer(base, cand->sequence);
      ++result.depth_evaluations;
      decision.depth_before = before;
      for (Transformation t : transformations(cand->kind, config.cz_to_cx)) {
        std::vector<Instruction> chain = rewrite(t, cand->sequence);
        DepthTracker tracker(nq, nc);
        tracker.add(scanner.window(*cand, chain));
        tracker.add(scoped_tail);
        ++result.depth_evaluations;
        const std::size_t after = chain_layer(tracker, cand->sequence);
        if (!decision.depth_after || after < *decision.depth_after) {
          decision.depth_after = after;
          decision.transformation = t;
          chosen = std::move(chain);
        }
      }
      if (config.chain_mode == ChainMode::Conservative) {
        if (*decision.depth_after >= before) continue;
        // The scoped window cannot see effects beyond its end, so the whole
        // circuit is rescheduled once per accepted rewrite.
        DepthTracker prefix(nq, nc);
        prefix.add(std::span(insts).first(start));
        DepthTracker old_depth = prefix;
        old_depth.add(std::span(insts).subspan(start));
        DepthTracker new_depth = std::move(prefix);
        new_depth.add(scanner.window(*cand, *chosen));
        new_depth.add(tail);
        if (new_depth.depth() > old_depth.depth()) continue;
      }
    }

    if (config.verify) {
      const auto old_window = std::span(insts).subspan(start, last + 1 - start);
      if (qubit_span(old_window, *chosen, nq) <= config.max_verify_qubits) {
        const auto [lhs, rhs] = sim::compact_pair(old_window, scanner.window(*cand, *chosen));
        if (!sim::equivalent_unitary(lhs, rhs, kVerifyTolerance)) {
          result.failure = VerificationFailure{
              result.decisions.size() - 1, start,
              std::string("rewrite of ") + to_string(cand->kind) + " chain at instruction " +
                  std::to_string(start) + " is not equivalent"};
          result.circuit = c;
          return result;
        }
      }
    }

    decision.applied = true;
    ++result.chains_applied;
    scanner.apply(*cand, *chosen);
  }
  result.circuit = scanner.circuit();
  return result;
}

}  // namespace qdepth
