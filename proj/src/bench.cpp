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

#include "qdepth/bench.hpp"

#include <array>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qdepth {

namespace {

constexpr std::array<std::string_view, 3> kFamilies = {"efficient_su2", "real_amplitudes",
                                                       "two_local"};
constexpr std::array<std::string_view, 5> kEntanglements = {"linear", "reverse_linear",
                                                            "circular", "sca", "full"};

void require_at_least(std::uint32_t n, std::uint32_t min, const char* what) {
  if (n < min) throw std::invalid_argument(std::string(what) + " too small");
}

std::vector<std::pair<Qubit, Qubit>> entangler_pairs(Entanglement e, std::uint32_t n,
                                                     std::uint32_t rep) {
  std::vector<std::pair<Qubit, Qubit>> pairs;
  switch (e) {
    case Entanglement::Linear:
      for (Qubit i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      break;
    case Entanglement::ReverseLinear:
      for (Qubit i = n - 1; i > 0; --i) pairs.emplace_back(i, i - 1);
      break;
    case Entanglement::Circular:
      for (Qubit i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      if (n > 2) pairs.emplace_back(n - 1, 0);
      break;
    case Entanglement::Sca: {
      auto ring = entangler_pairs(Entanglement::Circular, n, 0);
      const std::size_t shift = ring.empty() ? 0 : rep % ring.size();
      for (std::size_t k = 0; k < ring.size(); ++k) {
        auto [a, b] = ring[(k + ring.size() - shift) % ring.size()];
        if (rep % 2 == 1) std::swap(a, b);
        pairs.emplace_back(a, b);
      }
      break;
    }
    case Entanglement::Full:
      for (Qubit i = 0; i < n; ++i) {
        for (Qubit j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      }
      break;
  }
  return pairs;
}

}  // namespace

Circuit gen_ghz_standard(std::uint32_t n) {
  require_at_least(n, 2, "GHZ size");
  Circuit c(n);
  c.append(Instruction::h(0));
  for (Qubit i = 0; i + 1 < n; ++i) c.append(Instruction::cx(i, i + 1));
  return c;
}

Circuit gen_cx_chain(std::uint32_t n, Direction direction) {
  require_at_least(n, 2, "chain size");
  Circuit c(n);
  if (direction == Direction::Forward) {
    for (Qubit i = 0; i + 1 < n; ++i) c.append(Instruction::cx(i, i + 1));
  } else {
    for (Qubit i = n - 1; i > 0; --i) c.append(Instruction::cx(i, i - 1));
  }
  return c;
}

Circuit gen_cz_chain(std::uint32_t n) {
  require_at_least(n, 2, "chain size");
  Circuit c(n);
  for (Qubit i = 0; i + 1 < n; ++i) c.append(Instruction::cz(i, i + 1));
  return c;
}

Circuit gen_intertwined(std::uint32_t n_chains, std::uint32_t chain_len) {
  require_at_least(n_chains, 2, "chain count");
  require_at_least(chain_len, 1, "chain length");
  const std::uint32_t width = chain_len + 1;
  Circuit c(n_chains * width);
  for (std::uint32_t g = 0; g < chain_len; ++g) {
    for (std::uint32_t k = 0; k < n_chains; ++k) {
      const Qubit base = k * width;
      c.append(Instruction::cx(base + g, base + g + 1));
    }
  }
  return c;
}

std::string_view to_string(AnsatzFamily f) { return kFamilies[static_cast<std::size_t>(f)]; }
std::string_view to_string(Entanglement e) { return kEntanglements[static_cast<std::size_t>(e)]; }

std::optional<AnsatzFamily> family_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kFamilies.size(); ++i) {
    if (kFamilies[i] == s) return static_cast<AnsatzFamily>(i);
  }
  return std::nullopt;
}

std::optional<Entanglement> entanglement_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kEntanglements.size(); ++i) {
    if (kEntanglements[i] == s) return static_cast<Entanglement>(i);
  }
  return std::nullopt;
}

Circuit gen_ansatz(const AnsatzSpec& spec) {
  require_at_least(spec.n, 2, "ansatz width");
  require_at_least(spec.reps, 1, "ansatz repetitions");
  std::mt19937_64 rng(spec.seed);
  auto angle = [&] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2 * std::numbers::pi;
  };
  Circuit c(spec.n);
  auto rotations = [&] {
    for (Qubit q = 0; q < spec.n; ++q) c.append(Instruction::ry(q, angle()));
    if (spec.family == AnsatzFamily::EfficientSu2) {
      for (Qubit q = 0; q < spec.n; ++q) c.append(Instruction::rz(q, angle()));
    }
  };
  for (std::uint32_t r = 0; r < spec.reps; ++r) {
    rotations();
    for (auto [a, b] : entangler_pairs(spec.entanglement, spec.n, r)) {
      c.append(spec.family == AnsatzFamily::TwoLocal ? Instruction::cz(a, b) : Instruction::cx(a, b));
    }
  }
  rotations();
  return c;
}

}  // namespace qdepth
