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

#include <gtest/gtest.h>

#include "qdepth/bench.hpp"
#include "qdepth/improve.hpp"
#include "qdepth/pipeline.hpp"
#include "qdepth/sim/oracle.hpp"

namespace qdepth {
namespace {

using I = Instruction;

std::size_t count(const Circuit& c, GateKind k) {
  return static_cast<std::size_t>(std::count_if(c.instructions().begin(), c.instructions().end(),
                                                [&](const Instruction& i) { return i.kind == k; }));
}

TEST(Generators, Ghz) {
  EXPECT_EQ(stats(gen_ghz_standard(3)), (DepthReport{3, 3, 2, 0}));
  EXPECT_EQ(depth(gen_ghz_standard(16)), 16u);
  EXPECT_THROW(gen_ghz_standard(1), std::invalid_argument);
}

TEST(Generators, Chains) {
  EXPECT_EQ(gen_cx_chain(5, Direction::Forward).instructions(),
            (std::vector<Instruction>{I::cx(0, 1), I::cx(1, 2), I::cx(2, 3), I::cx(3, 4)}));
  EXPECT_EQ(gen_cx_chain(5, Direction::Reverse).instructions(),
            (std::vector<Instruction>{I::cx(4, 3), I::cx(3, 2), I::cx(2, 1), I::cx(1, 0)}));
  EXPECT_EQ(depth(gen_cz_chain(5)), 4u);
  for (std::uint32_t n = 2; n < 40; ++n) {
    EXPECT_EQ(depth(gen_cx_chain(n, Direction::Reverse)), n - 1);
  }
}

TEST(Generators, Intertwined) {
  const Circuit c = gen_intertwined(3, 6);
  EXPECT_EQ(c.num_qubits(), 21u);
  EXPECT_EQ(count(c, GateKind::CX), 18u);
  EXPECT_EQ(c[0], I::cx(0, 1));
  EXPECT_EQ(c[1], I::cx(7, 8));
  EXPECT_EQ(c[3], I::cx(1, 2));
  for (std::uint32_t len = 8; len <= 12; ++len) {
    const Circuit w = gen_intertwined(3, len);
    PassConfig cfg;
    cfg.ghz_mode = GhzMode::Off;
    EXPECT_LT(depth(gate_and_apply(w, cfg).circuit), depth(w)) << len;
  }
}

TEST(Ansatz, Counts) {
  const Circuit c = gen_ansatz({AnsatzFamily::RealAmplitudes, 4, 1, Entanglement::Linear, 1});
  EXPECT_EQ(count(c, GateKind::RY), 8u);
  EXPECT_EQ(count(c, GateKind::CX), 3u);
  EXPECT_EQ(c.size(), 11u);

  const Circuit su2 = gen_ansatz({AnsatzFamily::EfficientSu2, 5, 2, Entanglement::Full, 1});
  EXPECT_EQ(count(su2, GateKind::RY), 15u);
  EXPECT_EQ(count(su2, GateKind::RZ), 15u);
  EXPECT_EQ(count(su2, GateKind::CX), 20u);

  const Circuit tl = gen_ansatz({AnsatzFamily::TwoLocal, 5, 1, Entanglement::Circular, 1});
  EXPECT_EQ(count(tl, GateKind::CZ), 5u);
}

TEST(Ansatz, EntanglementPatterns) {
  auto pairs = [](Entanglement e, std::uint32_t reps) {
    const Circuit c = gen_ansatz({AnsatzFamily::RealAmplitudes, 4, reps, e, 0});
    std::vector<std::pair<Qubit, Qubit>> out;
    for (const Instruction& i : c.instructions()) {
      if (i.kind == GateKind::CX) out.emplace_back(i.qubits[0], i.qubits[1]);
    }
    return out;
  };
  using P = std::vector<std::pair<Qubit, Qubit>>;
  EXPECT_EQ(pairs(Entanglement::ReverseLinear, 1), (P{{3, 2}, {2, 1}, {1, 0}}));
  EXPECT_EQ(pairs(Entanglement::Circular, 1), (P{{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_EQ(pairs(Entanglement::Sca, 2),
            (P{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 3}, {1, 0}, {2, 1}, {3, 2}}));
}

TEST(Ansatz, Deterministic) {
  const AnsatzSpec spec{AnsatzFamily::EfficientSu2, 6, 3, Entanglement::Sca, 42};
  EXPECT_EQ(gen_ansatz(spec), gen_ansatz(spec));
  AnsatzSpec other = spec;
  other.seed = 43;
  EXPECT_NE(gen_ansatz(spec), gen_ansatz(other));
  for (const Instruction& i : gen_ansatz(spec).instructions()) {
    if (i.angle) {
      EXPECT_GE(*i.angle, 0.0);
      EXPECT_LT(*i.angle, 2 * M_PI);
    }
  }
}

TEST(Ansatz, TwoLocalReverseLinearImproves) {
  const Circuit c = gen_ansatz({AnsatzFamily::TwoLocal, 20, 1, Entanglement::ReverseLinear, 7});
  PassConfig cfg;
  EXPECT_LT(depth(gate_and_apply(c, cfg).circuit), depth(c));
}

TEST(BenchRows, CsvShape) {
  BenchOptions o;
  o.suite = Suite::Ghz;
  o.range = parse_range("4:9:4");
  const auto rows = run_bench(o);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(csv_row(rows[1]), "ghz,4,1,robust,4,3,4,4,0,0,1\n");
  EXPECT_EQ(csv_header().rfind("# qdepth ", 0), 0u);
  EXPECT_NE(csv_header().find("rng=mt19937_64"), std::string::npos);
  EXPECT_THROW(parse_range("5:5"), std::invalid_argument);
  EXPECT_THROW(parse_range("1:x:2"), std::invalid_argument);
  EXPECT_THROW(parse_range("1:9:0"), std::invalid_argument);
}

}  // namespace
}  // namespace qdepth
