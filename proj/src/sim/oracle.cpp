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

#include "qdepth/sim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qdepth::sim {

namespace {

constexpr double kPruneProbability = 1e-12;

void check_size(std::uint32_t n) {
  if (n > kMaxOracleQubits) {
    throw OracleError(OracleErrorKind::TooManyQubits,
                      "oracle supports at most " + std::to_string(kMaxOracleQubits) + " qubits, got " +
                          std::to_string(n));
  }
}

// Gate with its matrix precomputed; rebuilding trig per column would dominate
// unitary extraction.
struct Op {
  GateKind kind;
  unsigned q0 = 0;
  unsigned q1 = 0;
  Mat2 m{};
};

std::vector<Op> lower_unitary(const Circuit& c) {
  check_size(c.num_qubits());
  std::vector<Op> ops;
  ops.reserve(c.size());
  for (const Instruction& inst : c.instructions()) {
    if (inst.kind == GateKind::Measure || inst.condition) {
      throw OracleError(OracleErrorKind::MeasurementPresent,
                        "unitary requires a measurement-free, unconditioned circuit");
    }
    if (inst.kind == GateKind::Barrier) continue;
    Op op{inst.kind, inst.qubits.at(0), 0};
    if (is_two_qubit(inst.kind)) {
      op.q1 = inst.qubits.at(1);
    } else {
      op.m = gate_matrix(inst.kind, inst.angle);
    }
    ops.push_back(op);
  }
  return ops;
}

void run(std::span<Amplitude> s, std::span<const Op> ops, const Kernels& k) {
  for (const Op& op : ops) {
    switch (op.kind) {
      case GateKind::CX: k.apply_cx(s, op.q0, op.q1); break;
      case GateKind::CZ: k.apply_cz(s, op.q0, op.q1); break;
      default: k.apply_1q(s, op.q0, op.m); break;
    }
  }
}

void column(std::vector<Amplitude>& s, std::size_t basis, std::span<const Op> ops, const Kernels& k) {
  std::fill(s.begin(), s.end(), Amplitude{});
  s[basis] = 1.0;
  run(s, ops, k);
}

std::size_t argmax_abs(std::span<const Amplitude> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::norm(v[i]) > std::norm(v[best])) best = i;
  }
  return best;
}

}  // namespace

StateVector::StateVector(std::uint32_t num_qubits, std::size_t basis)
    : num_qubits_(num_qubits) {
  check_size(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{});
  if (basis >= amps_.size()) throw OracleError(OracleErrorKind::BadInput, "basis index out of range");
  amps_[basis] = 1.0;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Amplitude& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::apply(const Instruction& inst) {
  const Kernels& k = active_kernels();
  switch (inst.kind) {
    case GateKind::CX: k.apply_cx(amps_, inst.qubits.at(0), inst.qubits.at(1)); break;
    case GateKind::CZ: k.apply_cz(amps_, inst.qubits.at(0), inst.qubits.at(1)); break;
    case GateKind::Measure:
    case GateKind::Barrier:
      throw OracleError(OracleErrorKind::MeasurementPresent, "StateVector::apply takes gates only");
    default: k.apply_1q(amps_, inst.qubits.at(0), gate_matrix(inst.kind, inst.angle)); break;
  }
}

Mat2 gate_matrix(GateKind kind, std::optional<double> angle) {
  using std::numbers::sqrt2;
  const Amplitude i{0.0, 1.0};
  const double t = angle.value_or(0.0) / 2.0;
  const double c = std::cos(t), s = std::sin(t);
  switch (kind) {
    case GateKind::H: return {1 / sqrt2, 1 / sqrt2, 1 / sqrt2, -1 / sqrt2};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -i, i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::RX: return {c, -i * s, -i * s, c};
    case GateKind::RY: return {c, -s, s, c};
    case GateKind::RZ: return {std::exp(-i * t), 0.0, 0.0, std::exp(i * t)};
    default: throw std::invalid_argument("gate_matrix: not a single-qubit gate");
  }
}

ComplexMatrix unitary(const Circuit& c) {
  const std::vector<Op> ops = lower_unitary(c);
  const Kernels& k = active_kernels();
  ComplexMatrix u;
  u.dim = std::size_t{1} << c.num_qubits();
  u.data.assign(u.dim * u.dim, Amplitude{});
  std::vector<Amplitude> col(u.dim);
  for (std::size_t x = 0; x < u.dim; ++x) {
    column(col, x, ops, k);
    for (std::size_t r = 0; r < u.dim; ++r) u.data[r * u.dim + x] = col[r];
  }
  return u;
}

std::vector<Branch> branches(const Circuit& c, std::size_t input) {
  check_size(c.num_qubits());
  const Kernels& k = active_kernels();
  const auto& insts = c.instructions();
  std::vector<Branch> done;

  struct Frame {
    std::size_t pc;
    Branch branch;
  };
  std::vector<Frame> stack;
  stack.push_back({0, Branch{{}, 1.0, StateVector(c.num_qubits(), input)}});

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    bool forked = false;
    for (; f.pc < insts.size(); ++f.pc) {
      const Instruction& inst = insts[f.pc];
      if (inst.kind == GateKind::Barrier) continue;
      if (inst.kind == GateKind::Measure) {
        const unsigned q = inst.qubits.at(0);
        const double p1 = k.prob_one(f.branch.state.amplitudes(), q);
        // Push outcome 1 first so outcome 0 is explored (and emitted) first.
        for (int outcome : {1, 0}) {
          const double p = outcome ? p1 : 1.0 - p1;
          if (p * f.branch.probability < kPruneProbability) continue;
          Frame child{f.pc + 1, f.branch};
          k.collapse(child.branch.state.amplitudes(), q, outcome, 1.0 / std::sqrt(p));
          child.branch.probability *= p;
          child.branch.outcomes[*inst.clbit] = outcome;
          stack.push_back(std::move(child));
        }
        forked = true;
        break;
      }
      if (inst.condition) {
        int parity = 0;
        for (Clbit b : inst.condition->bits) {
          auto it = f.branch.outcomes.find(b);
          if (it == f.branch.outcomes.end()) {
            throw OracleError(OracleErrorKind::ConditionBeforeMeasurement,
                              "condition on clbit " + std::to_string(b) + " before it is measured");
          }
          parity ^= it->second;
        }
        if (!parity) continue;
      }
      Instruction bare = inst;
      bare.condition.reset();
      f.branch.state.apply(bare);
    }
    if (!forked) done.push_back(std::move(f.branch));
  }
  return done;
}

bool same_up_to_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol) {
  if (a.size() != b.size()) return false;
  const std::size_t p = argmax_abs(a);
  if (std::abs(a[p]) == 0.0) return std::all_of(b.begin(), b.end(), [&](Amplitude z) { return std::abs(z) <= tol; });
  const Amplitude phase = b[p] / a[p];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(b[i] - phase * a[i]) > tol) return false;
  }
  return true;
}

bool equivalent_unitary(const Circuit& c1, const Circuit& c2, double tol) {
  if (c1.num_qubits() != c2.num_qubits()) {
    throw OracleError(OracleErrorKind::QubitCountMismatch, "circuits act on different qubit counts");
  }
  const std::vector<Op> ops1 = lower_unitary(c1);
  const std::vector<Op> ops2 = lower_unitary(c2);
  if (c1.instructions() == c2.instructions()) return true;

  // Columns are streamed; the global phase is fixed on the largest entry of
  // the first column of U1, which has magnitude at least 2^{-n/2}.
  const Kernels& k = active_kernels();
  const std::size_t dim = std::size_t{1} << c1.num_qubits();
  std::vector<Amplitude> s1(dim), s2(dim);
  Amplitude phase;
  for (std::size_t x = 0; x < dim; ++x) {
    column(s1, x, ops1, k);
    column(s2, x, ops2, k);
    if (x == 0) {
      const std::size_t p = argmax_abs(s1);
      phase = s2[p] / s1[p];
      if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    }
    for (std::size_t r = 0; r < dim; ++r) {
      if (std::abs(s2[r] - phase * s1[r]) > tol) return false;
    }
  }
  return true;
}

bool equivalent_on_zero(const Circuit& c1, const Circuit& c2, double tol) {
  if (c1.num_qubits() != c2.num_qubits()) {
    throw OracleError(OracleErrorKind::QubitCountMismatch, "circuits act on different qubit counts");
  }
  const std::vector<Branch> ref = branches(c1, 0);
  if (ref.size() != 1) {
    throw OracleError(OracleErrorKind::NotDeterministic, "reference circuit must have a single branch");
  }
  for (const Branch& b : branches(c2, 0)) {
    if (!same_up_to_phase(ref.front().state.amplitudes(), b.state.amplitudes(), tol)) return false;
  }
  return true;
}

std::pair<Circuit, Circuit> compact_pair(std::span<const Instruction> a,
                                         std::span<const Instruction> b) {
  std::map<Qubit, Qubit> qmap;
  std::map<Clbit, Clbit> cmap;
  auto collect = [&](std::span<const Instruction> insts) {
    for (const Instruction& inst : insts) {
      for (Qubit q : inst.qubits) qmap.emplace(q, 0);
      if (inst.clbit) cmap.emplace(*inst.clbit, 0);
      if (inst.condition) {
        for (Clbit c : inst.condition->bits) cmap.emplace(c, 0);
      }
    }
  };
  collect(a);
  collect(b);
  Qubit nq = 0;
  for (auto& [from, to] : qmap) to = nq++;
  Clbit nc = 0;
  for (auto& [from, to] : cmap) to = nc++;

  auto remap = [&](std::span<const Instruction> insts) {
    std::vector<Instruction> out(insts.begin(), insts.end());
    for (Instruction& inst : out) {
      for (Qubit& q : inst.qubits) q = qmap.at(q);
      if (inst.clbit) inst.clbit = cmap.at(*inst.clbit);
      if (inst.condition) {
        for (Clbit& c : inst.condition->bits) c = cmap.at(c);
      }
    }
    return Circuit(std::max<Qubit>(nq, 1), nc, std::move(out));
  };
  return {remap(a), remap(b)};
}

}  // namespace qdepth::sim
