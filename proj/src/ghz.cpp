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

#include "qdepth/ghz.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace qdepth {

namespace {

constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> first_use(const Circuit& c) {
  std::vector<std::size_t> first(c.num_qubits(), kNever);
  const auto& insts = c.instructions();
  for (std::size_t i = insts.size(); i-- > 0;) {
    for (Qubit q : insts[i].qubits) first[q] = i;
  }
  return first;
}

}  // namespace

std::vector<GhzSite> detect_ghz(const Circuit& c) {
  const auto& insts = c.instructions();
  const std::vector<std::size_t> first = first_use(c);
  std::vector<std::size_t> member_of(c.num_qubits(), kNever);
  std::vector<GhzSite> sites;

  for (std::size_t h = 0; h < insts.size(); ++h) {
    const Instruction& head = insts[h];
    if (head.kind != GateKind::H || head.condition || first[head.qubits[0]] != h) continue;

    GhzSite site;
    site.hadamard_index = h;
    site.root = head.qubits[0];
    site.members = {site.root};
    site.gate_indices = {h};
    member_of[site.root] = h;
    std::optional<GhzShape> shape;

    for (std::size_t j = h + 1; j < insts.size(); ++j) {
      const Instruction& inst = insts[j];
      bool touches = false;
      for (Qubit q : inst.qubits) touches = touches || member_of[q] == h;
      if (!touches) continue;

      if (inst.kind != GateKind::CX || inst.condition) break;
      const Qubit control = inst.qubits[0], target = inst.qubits[1];
      if (member_of[target] == h || first[target] != j) break;

      const bool from_root = control == site.root;
      const bool from_tail = control == site.members.back();
      GhzShape next;
      if (site.members.size() == 1) {
        next = GhzShape::Chain;  // first CX fits both shapes
      } else if (site.members.size() == 2) {
        if (from_tail) {
          next = GhzShape::Chain;
        } else if (from_root) {
          next = GhzShape::Fanout;
        } else {
          break;
        }
      } else if (*shape == GhzShape::Chain ? from_tail : from_root) {
        next = *shape;
      } else {
        break;
      }
      shape = next;
      site.members.push_back(target);
      site.gate_indices.push_back(j);
      member_of[target] = h;
    }

    if (site.members.size() >= 2) {
      site.shape = shape.value_or(GhzShape::Chain);
      sites.push_back(std::move(site));
    }
  }
  return sites;
}

std::vector<Instruction> build_ghz_standard(std::span<const Qubit> members) {
  if (members.size() < 2) throw std::invalid_argument("GHZ needs at least two qubits");
  std::vector<Instruction> out{Instruction::h(members[0])};
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    out.push_back(Instruction::cx(members[i], members[i + 1]));
  }
  return out;
}

std::vector<Instruction> build_ghz_log(std::span<const Qubit> members) {
  const std::size_t n = members.size();
  if (n < 2) throw std::invalid_argument("GHZ needs at least two qubits");
  std::vector<Instruction> out{Instruction::h(members[0])};
  for (std::size_t step = 1; step < n; step *= 2) {
    // Members [0, step) already hold the root value.
    for (std::size_t i = 0; i < step && i + step < n; ++i) {
      out.push_back(Instruction::cx(members[i], members[i + step]));
    }
  }
  return out;
}

std::vector<Instruction> build_ghz_parallel(std::span<const Qubit> members,
                                            std::span<const Clbit> fresh_clbits) {
  const std::size_t n = members.size();
  if (n < 3) throw std::invalid_argument("constant-depth GHZ needs at least three qubits");
  if (fresh_clbits.size() != ghz_parallel_measurements(n)) {
    throw std::invalid_argument("constant-depth GHZ needs one clbit per fusion qubit");
  }
  const bool ring = n % 2 == 0;
  auto fusion_bit = [&](std::size_t pos) { return fresh_clbits[pos / 2]; };

  std::vector<Instruction> out;
  for (std::size_t d = 0; d < n; d += 2) out.push_back(Instruction::h(members[d]));
  for (std::size_t d = 0; d < n; d += 2) {
    if (d > 0) {
      out.push_back(Instruction::cx(members[d], members[d - 1]));
    } else if (ring) {
      out.push_back(Instruction::cx(members[0], members[n - 1]));
    }
  }
  for (std::size_t d = 0; d + 1 < n; d += 2) out.push_back(Instruction::cx(members[d], members[d + 1]));
  for (std::size_t f = 1; f < n; f += 2) out.push_back(Instruction::measure(members[f], fusion_bit(f)));

  // Data qubit d differs from position 0 by the parity of every fusion
  // outcome to its left.
  std::vector<Clbit> prefix;
  for (std::size_t d = 2; d < n; d += 2) {
    prefix.push_back(fusion_bit(d - 1));
    out.push_back(Instruction::x(members[d]).if_parity(prefix));
  }
  for (std::size_t f = 1; f < n; f += 2) {
    out.push_back(Instruction::x(members[f]).if_parity({fusion_bit(f)}));
  }
  for (std::size_t f = 1; f < n; f += 2) out.push_back(Instruction::cx(members[f - 1], members[f]));
  return out;
}

GhzPassResult apply_ghz_pass(const Circuit& c, GhzMode mode) {
  GhzPassResult result{c, {}, 0};
  if (mode == GhzMode::Off) return result;
  result.sites = detect_ghz(c);
  if (result.sites.empty()) return result;

  Circuit out = c;
  std::set<std::string> names;
  for (const Register& r : c.qregs()) names.insert(r.name);
  for (const Register& r : c.cregs()) names.insert(r.name);
  std::size_t next_reg = 0;
  auto fresh_bit = [&] {
    std::string name;
    do {
      name = "m" + std::to_string(next_reg++);
    } while (names.count(name));
    names.insert(name);
    return out.add_creg(name, 1);
  };

  const auto& insts = c.instructions();
  std::vector<std::vector<Instruction>> repl(result.sites.size());
  for (std::size_t k = 0; k < result.sites.size(); ++k) {
    const GhzSite& s = result.sites[k];
    if (mode == GhzMode::Parallel && s.members.size() >= 3) {
      std::vector<Clbit> bits;
      for (std::size_t b = 0; b < ghz_parallel_measurements(s.members.size()); ++b) {
        bits.push_back(fresh_bit());
      }
      repl[k] = build_ghz_parallel(s.members, bits);
    } else {
      repl[k] = build_ghz_log(s.members);
    }
  }

  std::vector<bool> accepted(result.sites.size(), mode == GhzMode::Parallel);
  auto assemble = [&] {
    std::vector<std::size_t> starts_at(insts.size(), kNever);
    std::vector<bool> consumed(insts.size(), false);
    for (std::size_t k = 0; k < result.sites.size(); ++k) {
      if (!accepted[k]) continue;
      starts_at[result.sites[k].hadamard_index] = k;
      for (std::size_t i : result.sites[k].gate_indices) consumed[i] = true;
    }
    std::vector<Instruction> body;
    body.reserve(insts.size());
    for (std::size_t i = 0; i < insts.size(); ++i) {
      if (starts_at[i] != kNever) {
        body.insert(body.end(), repl[starts_at[i]].begin(), repl[starts_at[i]].end());
      }
      if (!consumed[i]) body.push_back(insts[i]);
    }
    return body;
  };

  if (mode == GhzMode::Robust) {
    // A shallower tree can still finish a member later than the original
    // chain did, so each site is kept only if the whole circuit does not
    // get deeper.
    std::size_t current = depth(c);
    for (std::size_t k = 0; k < result.sites.size(); ++k) {
      accepted[k] = true;
      const std::size_t d = depth(assemble(), out.num_qubits(), out.num_clbits());
      if (d > current) {
        accepted[k] = false;
      } else {
        current = d;
      }
    }
  }
  result.replaced = static_cast<std::size_t>(std::count(accepted.begin(), accepted.end(), true));
  result.circuit = out.with_instructions(assemble());
  return result;
}

}  // namespace qdepth
