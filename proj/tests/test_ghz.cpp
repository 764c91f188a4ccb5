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

#include <cmath>
#include <algorithm>
#include <numeric>
#include <random>

#include "qdepth/bench.hpp"
#include "qdepth/ghz.hpp"
#include "qdepth/qasm.hpp"
#include "qdepth/sim/oracle.hpp"

namespace qdepth {
namespace {

using I = Instruction;

std::vector<Qubit> iota(std::uint32_t n) {
  std::vector<Qubit> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

TEST(Detect, StandardChain) {
  auto sites = detect_ghz(gen_ghz_standard(6));
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].members, iota(6));
  EXPECT_EQ(sites[0].shape, GhzShape::Chain);
  EXPECT_EQ(sites[0].gate_indices.size(), 6u);
}

TEST(Detect, Fanout) {
  Circuit c(4, 0, {I::h(2), I::cx(2, 0), I::cx(2, 3), I::cx(2, 1)});
  auto sites = detect_ghz(c);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].shape, GhzShape::Fanout);
  EXPECT_EQ(sites[0].members, (std::vector<Qubit>{2, 0, 3, 1}));
}

TEST(Detect, StopsAtUsedTarget) {
  // q2 was used before, so CX(1,2) does not extend the site.
  Circuit c(3, 0, {I::x(2), I::h(0), I::cx(0, 1), I::cx(1, 2)});
  auto sites = detect_ghz(c);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].members, (std::vector<Qubit>{0, 1}));
}

TEST(Detect, StopsAtOtherGateOnMember) {
  Circuit c(4, 0, {I::h(0), I::cx(0, 1), I::rz(1, 0.3), I::cx(1, 2), I::cx(2, 3)});
  auto sites = detect_ghz(c);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].members.size(), 2u);
}

TEST(Detect, IgnoresUnrelatedGates) {
  Circuit c(5, 0, {I::h(0), I::rx(4, 1.0), I::cx(0, 1), I::h(4), I::cx(1, 2), I::cx(2, 3)});
  auto sites = detect_ghz(c);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].members, iota(4));
}

TEST(Detect, NeedsFreshRootAndOneCx) {
  EXPECT_TRUE(detect_ghz(Circuit(2, 0, {I::x(0), I::h(0), I::cx(0, 1)})).empty());
  EXPECT_TRUE(detect_ghz(Circuit(2, 0, {I::h(0), I::h(1)})).empty());
  EXPECT_TRUE(detect_ghz(Circuit(2, 1, {I::h(0).if_parity({0}), I::cx(0, 1)})).empty());
}

TEST(Builders, StandardAndLogDepths) {
  for (std::uint32_t n = 2; n <= 64; ++n) {
    const auto m = iota(n);
    EXPECT_EQ(depth(build_ghz_standard(m), n, 0), n);
    const auto lg = build_ghz_log(m);
    EXPECT_EQ(depth(lg, n, 0), 1 + ceil_log2(n)) << n;
    EXPECT_EQ(lg.size(), n);
  }
}

TEST(Builders, ParallelShape) {
  for (std::uint32_t n = 3; n <= 64; ++n) {
    const auto m = iota(n);
    std::vector<Clbit> bits(ghz_parallel_measurements(n));
    std::iota(bits.begin(), bits.end(), 0);
    const auto p = build_ghz_parallel(m, bits);
    Circuit c(n, static_cast<std::uint32_t>(bits.size()), p);
    EXPECT_TRUE(validate(c).empty());
    const DepthReport s = stats(c);
    EXPECT_EQ(s.depth, 6u) << n;
    EXPECT_EQ(s.measure_count, n / 2);
    EXPECT_LE(s.gate_count, 4u * n);
  }
  const std::vector<Qubit> two{0, 1};
  EXPECT_THROW(build_ghz_parallel(two, std::vector<Clbit>{0}), std::invalid_argument);
  const auto m = iota(5);
  EXPECT_THROW(build_ghz_parallel(m, std::vector<Clbit>{0}), std::invalid_argument);
}

class GhzEquivalence : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(GhzEquivalence, AllBuildersPrepareGhz) {
  const std::uint32_t n = GetParam();
  // Scrambled member order on a register with a spare qubit.
  std::vector<Qubit> m(n + 1);
  std::iota(m.begin(), m.end(), 0);
  std::mt19937 rng(n);
  std::shuffle(m.begin(), m.end(), rng);
  m.pop_back();
  const Circuit ref(n + 1, 0, build_ghz_standard(m));
  EXPECT_TRUE(sim::equivalent_on_zero(ref, Circuit(n + 1, 0, build_ghz_log(m)), 1e-9));
  if (n >= 3) {
    std::vector<Clbit> bits(ghz_parallel_measurements(n));
    std::iota(bits.begin(), bits.end(), 0);
    Circuit par(n + 1, static_cast<std::uint32_t>(bits.size()), build_ghz_parallel(m, bits));
    EXPECT_TRUE(sim::equivalent_on_zero(ref, par, 1e-9));
    EXPECT_EQ(sim::branches(par, 0).size(), std::size_t{1} << (n / 2 - (n % 2 == 0 ? 1 : 0)));
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, GhzEquivalence, ::testing::Range<std::uint32_t>(2, 11));

TEST(Pass, RobustGhz16) {
  GhzPassResult r = apply_ghz_pass(gen_ghz_standard(16), GhzMode::Robust);
  EXPECT_EQ(r.replaced, 1u);
  EXPECT_EQ(stats(r.circuit).depth, 5u);
}

TEST(Pass, OffIsIdentity) {
  const Circuit c = gen_ghz_standard(8);
  GhzPassResult r = apply_ghz_pass(c, GhzMode::Off);
  EXPECT_EQ(r.circuit, c);
  EXPECT_EQ(r.replaced, 0u);
}

TEST(Pass, KeepsSurroundingInstructions) {
  Circuit c(6, 0, {I::x(5), I::h(0), I::rx(5, 0.2), I::cx(0, 1), I::cx(1, 2), I::cx(2, 3),
                   I::cx(3, 4), I::cx(4, 5)});
  for (GhzMode mode : {GhzMode::Robust, GhzMode::Parallel}) {
    GhzPassResult r = apply_ghz_pass(c, mode);
    EXPECT_TRUE(validate(r.circuit).empty());
    EXPECT_TRUE(sim::equivalent_on_zero(c, r.circuit, 1e-9));
  }
}

TEST(Pass, ParallelAllocatesFreshRegisters) {
  Circuit c(4, 1, {I::h(0), I::cx(0, 1), I::cx(1, 2), I::cx(2, 3)});
  c.set_registers({{"q", 4}}, {{"m0", 1}});
  GhzPassResult r = apply_ghz_pass(c, GhzMode::Parallel);
  EXPECT_EQ(r.circuit.num_clbits(), 3u);
  const auto cregs = r.circuit.cregs();
  ASSERT_EQ(cregs.size(), 3u);
  EXPECT_EQ(cregs[1].name, "m1");
  EXPECT_EQ(cregs[2].name, "m2");
  // The result must survive a text round trip.
  Circuit back = parse_qasm(emit_qasm(r.circuit));
  EXPECT_TRUE(sim::equivalent_on_zero(c, back, 1e-9));
}

TEST(Pass, TwoMemberParallelFallsBack) {
  GhzPassResult r = apply_ghz_pass(gen_ghz_standard(2), GhzMode::Parallel);
  EXPECT_EQ(stats(r.circuit).measure_count, 0u);
  EXPECT_EQ(r.circuit.num_clbits(), 0u);
}

}  // namespace
}  // namespace qdepth
