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
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdepth/circuit.hpp"
#include "qdepth/sim/kernels.hpp"

namespace qdepth::sim {

/// Statevector work is capped here; 2^12 amplitudes keeps brute-force
/// checks fast.
constexpr std::uint32_t kMaxOracleQubits = 12;

enum class OracleErrorKind {
  MeasurementPresent,
  TooManyQubits,
  ConditionBeforeMeasurement,
  QubitCountMismatch,
  NotDeterministic,
  BadInput,
};

class OracleError : public std::runtime_error {
 public:
  OracleError(OracleErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] OracleErrorKind kind() const { return kind_; }

 private:
  OracleErrorKind kind_;
};

class StateVector {
 public:
  /// Basis state |basis>; qubit k is bit k of the index.
  explicit StateVector(std::uint32_t num_qubits, std::size_t basis = 0);

  [[nodiscard]] std::uint32_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const { return amps_; }
  [[nodiscard]] std::span<Amplitude> amplitudes() { return amps_; }
  [[nodiscard]] double norm_squared() const;

  /// Applies an unconditioned gate; measurements and barriers are rejected.
  void apply(const Instruction& inst);

 private:
  std::uint32_t num_qubits_;
  std::vector<Amplitude> amps_;
};

struct ComplexMatrix {
  std::size_t dim = 0;
  std::vector<Amplitude> data;  ///< row-major

  [[nodiscard]] Amplitude at(std::size_t row, std::size_t col) const { return data[row * dim + col]; }
};

/// RZ(t) = diag(e^{-it/2}, e^{it/2}); RX and RY follow the same half-angle
/// convention.
Mat2 gate_matrix(GateKind kind, std::optional<double> angle = std::nullopt);

/// Product of gate matrices in program order. Requires a measurement-free,
/// condition-free circuit on at most kMaxOracleQubits qubits.
ComplexMatrix unitary(const Circuit& c);

struct Branch {
  std::map<Clbit, int> outcomes;
  double probability = 0.0;
  StateVector state;
};

/// Depth-first enumeration of measurement outcomes starting from |input>.
/// Branches with probability below 1e-12 are dropped.
std::vector<Branch> branches(const Circuit& c, std::size_t input);

/// True iff U(c2) = e^{i phi} U(c1) entry-wise within `tol`.
bool equivalent_unitary(const Circuit& c1, const Circuit& c2, double tol);

/// Runs both circuits from |0...0>. `c1` must be deterministic (one branch);
/// every branch of `c2` must reproduce its final state up to global phase.
bool equivalent_on_zero(const Circuit& c1, const Circuit& c2, double tol);

/// Compares two states up to global phase, pivoting on the largest entry of `a`.
bool same_up_to_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol);

/// Rewrites two instruction lists onto the dense set of qubits either one
/// touches, so a window of a large circuit can be checked on few qubits.
/// Clbits are renumbered the same way.
std::pair<Circuit, Circuit> compact_pair(std::span<const Instruction> a,
                                         std::span<const Instruction> b);

}  // namespace qdepth::sim
