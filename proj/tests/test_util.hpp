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

// Reference helpers for tests. The dense simulator here shares no code with
// the library oracle so the two can check each other.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdepth/circuit.hpp"

namespace qdepth::testing {

using Cplx = std::complex<double>;

struct Dense {
  std::size_t dim = 0;
  std::vector<Cplx> m;  // row-major
  Cplx operator()(std::size_t r, std::size_t c) const { return m[r * dim + c]; }
};

inline void ref_apply(std::vector<Cplx>& psi, const Instruction& g) {
  const std::size_t dim = psi.size();
  std::vector<Cplx> out(dim, 0.0);
  const Cplx i(0, 1);
  const auto bit = [](std::size_t x, Qubit q) { return (x >> q) & 1u; };
  for (std::size_t x = 0; x < dim; ++x) {
    const Cplx a = psi[x];
    if (a == 0.0) continue;
    if (g.kind == GateKind::CX) {
      const std::size_t y = bit(x, g.qubits[0]) ? x ^ (std::size_t{1} << g.qubits[1]) : x;
      out[y] += a;
      continue;
    }
    if (g.kind == GateKind::CZ) {
      out[x] += (bit(x, g.qubits[0]) && bit(x, g.qubits[1])) ? -a : a;
      continue;
    }
    const Qubit q = g.qubits[0];
    const std::size_t b = bit(x, q);
    const std::size_t x0 = x & ~(std::size_t{1} << q);
    const std::size_t x1 = x0 | (std::size_t{1} << q);
    // Column b of the 2x2 matrix.
    Cplx c0, c1;
    const double t = g.angle.value_or(0.0);
    const double co = std::cos(t / 2), si = std::sin(t / 2);
    switch (g.kind) {
      case GateKind::H:
        c0 = M_SQRT1_2;
        c1 = b ? -M_SQRT1_2 : M_SQRT1_2;
        break;
      case GateKind::X:
        c0 = b ? 1 : 0;
        c1 = b ? 0 : 1;
        break;
      case GateKind::Y:
        c0 = b ? -i : 0;
        c1 = b ? 0 : i;
        break;
      case GateKind::Z:
        c0 = b ? 0 : 1;
        c1 = b ? -1 : 0;
        break;
      case GateKind::RX:
        c0 = b ? -i * si : co;
        c1 = b ? co : -i * si;
        break;
      case GateKind::RY:
        c0 = b ? -si : co;
        c1 = b ? co : si;
        break;
      case GateKind::RZ:
        c0 = b ? 0 : std::exp(-i * (t / 2));
        c1 = b ? std::exp(i * (t / 2)) : 0;
        break;
      default:
        throw std::logic_error("ref_apply: unsupported instruction");
    }
    out[x0] += c0 * a;
    out[x1] += c1 * a;
  }
  psi = std::move(out);
}

inline Dense ref_unitary(std::span<const Instruction> insts, std::uint32_t nq) {
  const std::size_t dim = std::size_t{1} << nq;
  Dense u{dim, std::vector<Cplx>(dim * dim)};
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Cplx> psi(dim, 0.0);
    psi[col] = 1.0;
    for (const Instruction& g : insts) ref_apply(psi, g);
    for (std::size_t r = 0; r < dim; ++r) u.m[r * dim + col] = psi[r];
  }
  return u;
}

inline Dense ref_unitary(const Circuit& c) { return ref_unitary(c.instructions(), c.num_qubits()); }

inline bool ref_equal(const Dense& a, const Dense& b, double tol) {
  for (std::size_t k = 0; k < a.m.size(); ++k) {
    if (std::abs(a.m[k] - b.m[k]) > tol) return false;
  }
  return true;
}

inline bool ref_equal_up_to_phase(const Dense& a, const Dense& b, double tol) {
  std::size_t p = 0;
  for (std::size_t k = 0; k < a.m.size(); ++k) {
    if (std::abs(a.m[k]) > std::abs(a.m[p])) p = k;
  }
  const Cplx phase = b.m[p] / a.m[p];
  for (std::size_t k = 0; k < a.m.size(); ++k) {
    if (std::abs(b.m[k] - phase * a.m[k]) > tol) return false;
  }
  return true;
}

/// Mixed H/RX/RY/RZ/CX/CZ circuit.
inline Circuit random_circuit(std::mt19937_64& rng, std::uint32_t nq, std::size_t len) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<Qubit> qubit(0, nq - 1);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  Circuit c(nq);
  for (std::size_t k = 0; k < len; ++k) {
    const Qubit a = qubit(rng);
    Qubit b = qubit(rng);
    while (b == a) b = qubit(rng);
    switch (kind(rng)) {
      case 0:
        c.append(Instruction::h(a));
        break;
      case 1:
        c.append(Instruction::rx(a, angle(rng)));
        break;
      case 2:
        c.append(Instruction::ry(a, angle(rng)));
        break;
      case 3:
        c.append(Instruction::rz(a, angle(rng)));
        break;
      case 4:
        c.append(Instruction::cx(a, b));
        break;
      default:
        c.append(Instruction::cz(a, b));
        break;
    }
  }
  return c;
}

/// Like random_circuit but biased towards CX/CZ chains with interleaved
/// rotations, so chain rewrites actually fire.
inline Circuit random_chainy_circuit(std::mt19937_64& rng, std::uint32_t nq, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<Qubit> qubit(0, nq - 1);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  Circuit c(nq);
  Qubit tail = qubit(rng);
  while (c.size() < len) {
    const int p = pick(rng);
    if (p < 5) {
      Qubit next = qubit(rng);
      while (next == tail) next = qubit(rng);
      c.append(p < 4 ? Instruction::cx(tail, next) : Instruction::cz(tail, next));
      tail = next;
    } else if (p < 7) {
      c.append(Instruction::rz(qubit(rng), angle(rng)));
    } else if (p < 8) {
      c.append(Instruction::ry(qubit(rng), angle(rng)));
    } else if (p < 9) {
      c.append(Instruction::h(qubit(rng)));
    } else {
      tail = qubit(rng);
    }
  }
  return c;
}

}  // namespace qdepth::testing
