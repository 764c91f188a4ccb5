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

#include <random>
#include <string>

#include "qdepth/qasm.hpp"
#include "qdepth/sim/oracle.hpp"
#include "test_util.hpp"

namespace qdepth {
namespace {

using I = Instruction;

constexpr const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

ParseError parse_error(const std::string& text) {
  try {
    parse_qasm(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseError({0, 0}, ParseErrorKind::Syntax, "");
}

TEST(Parse, Basic) {
  Circuit c = parse_qasm(std::string(kHeader) +
                         "qreg q[3];\ncreg c[1];\nh q[0];\ncx q[0],q[1];\nCX q[1],q[2];\n"
                         "rz(pi/2) q[2];\nmeasure q[0] -> c[0];\nif(c==1) x q[1];\n");
  EXPECT_EQ(c.num_qubits(), 3u);
  EXPECT_EQ(c.num_clbits(), 1u);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c[2], I::cx(1, 2));
  EXPECT_DOUBLE_EQ(*c[3].angle, M_PI / 2);
  EXPECT_EQ(c[5], I::x(1).if_parity({0}));
}

TEST(Parse, RegistersFlattenInOrder) {
  Circuit c = parse_qasm(std::string(kHeader) + "qreg a[2];\nqreg b[2];\ncx a[1],b[0];\n");
  EXPECT_EQ(c[0], I::cx(1, 2));
  ASSERT_EQ(c.qregs().size(), 2u);
  EXPECT_EQ(c.qregs()[1].name, "b");
}

TEST(Parse, Broadcast) {
  Circuit c = parse_qasm(std::string(kHeader) +
                         "qreg q[3];\nqreg r[3];\ncreg m[3];\nh q;\ncx q,r;\nmeasure r -> m;\n");
  EXPECT_EQ(c.size(), 9u);
  EXPECT_EQ(c[4], I::cx(1, 4));
  EXPECT_EQ(c[8], I::measure(5, 2));
}

TEST(Parse, Expressions) {
  Circuit c = parse_qasm(std::string(kHeader) +
                         "qreg q[1];\nrx(-(pi*3)/4 + 2^3 - 1.5e1) q[0];\nry(0.25) q[0];\n");
  EXPECT_DOUBLE_EQ(*c[0].angle, -(M_PI * 3) / 4 + 8 - 15);
  EXPECT_DOUBLE_EQ(*c[1].angle, 0.25);
}

TEST(Parse, CommentsAndBarrier) {
  Circuit c = parse_qasm(std::string(kHeader) + "// hi\nqreg q[2];\nbarrier q;\nbarrier q[1];\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], I::barrier({0, 1}));
}

TEST(Parse, EmptyBody) {
  Circuit c = parse_qasm(kHeader);
  EXPECT_EQ(c.num_qubits(), 0u);
  EXPECT_TRUE(c.empty());
}

TEST(ParseErrors, SpansAndKinds) {
  ParseError e = parse_error(std::string(kHeader) + "qreg q[2];\ncx q[0] q[1];\n");
  EXPECT_EQ(e.kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(e.span().line, 4u);
  EXPECT_EQ(e.span().column, 9u);
  EXPECT_NE(std::string(e.what()).find("4:9: syntax error"), std::string::npos);

  EXPECT_EQ(parse_error("qreg q[1];").kind(), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_error("OPENQASM 3.0;").kind(), ParseErrorKind::UnsupportedConstruct);
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[1];\ngate g a { h a; }\n").kind(),
            ParseErrorKind::UnsupportedConstruct);
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[1];\nreset q[0];\n").kind(),
            ParseErrorKind::UnsupportedConstruct);
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[1];\nu3(1,2,3) q[0];\n").kind(),
            ParseErrorKind::UnsupportedConstruct);
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[2];\ncx q[0],q[0];\n").kind(),
            ParseErrorKind::Semantic);
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[2];\nh q[2];\n").kind(),
            ParseErrorKind::Semantic);
  EXPECT_EQ(parse_error(std::string(kHeader) +
                        "qreg q[2];\ncreg c[1];\nmeasure q[0] -> c[0];\nmeasure q[1] -> c[0];\n")
                .kind(),
            ParseErrorKind::Semantic);
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[1];\ncreg c[2];\nif(c==1) x q[0];\n").kind(),
            ParseErrorKind::UnsupportedConstruct);
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[1];\nrx q[0];\n").kind(),
            ParseErrorKind::Semantic);
}

TEST(ParseErrors, DeepNestingIsRejected) {
  std::string expr(1000, '(');
  expr += "1" + std::string(1000, ')');
  EXPECT_EQ(parse_error(std::string(kHeader) + "qreg q[1];\nrx(" + expr + ") q[0];\n").kind(),
            ParseErrorKind::Syntax);
}

TEST(Emit, Deterministic) {
  Circuit c(2, 1, {I::h(0), I::rz(1, 0.1), I::measure(0, 0), I::x(1).if_parity({0})});
  EXPECT_EQ(emit_qasm(c),
            std::string(kHeader) +
                "qreg q[2];\ncreg c[1];\nh q[0];\nrz(0.10000000000000001) q[1];\n"
                "measure q[0] -> c[0];\nif(c==1) x q[1];\n");
  // Wider registers holding a condition bit are split.
  Circuit w(2, 2, {I::measure(0, 1), I::x(1).if_parity({1})});
  EXPECT_EQ(emit_qasm(w), std::string(kHeader) +
                              "qreg q[2];\ncreg c_0[1];\ncreg c_1[1];\nmeasure q[0] -> c_1[0];\n"
                              "if(c_1==1) x q[1];\n");
}

TEST(Emit, ParityLoweringKeepsSemantics) {
  // X conditioned on c0 ^ c1 is emitted as two single-bit ifs.
  Circuit c(3, 2, {I::h(0), I::h(1), I::measure(0, 0), I::measure(1, 1), I::x(2).if_parity({0, 1})});
  Circuit back = parse_qasm(emit_qasm(c));
  EXPECT_EQ(back.size(), 6u);
  const auto a = sim::branches(c, 0);
  const auto b = sim::branches(back, 0);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].outcomes, b[k].outcomes);
    EXPECT_TRUE(sim::same_up_to_phase(a[k].state.amplitudes(), b[k].state.amplitudes(), 1e-12));
  }
  EXPECT_THROW(emit_qasm(Circuit(1, 2, {I::rz(0, 1.0).if_parity({0, 1})})), std::logic_error);
}

class RoundTrip : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RoundTrip, ParseOfEmitIsIdentity) {
  std::mt19937_64 rng(GetParam());
  const std::uint32_t nq = 2 + static_cast<std::uint32_t>(rng() % 6);
  Circuit c = testing::random_circuit(rng, nq, rng() % 40);
  std::vector<Instruction> insts = c.instructions();
  insts.push_back(I::barrier({0, 1}));
  insts.push_back(I::y(0));
  insts.push_back(I::z(1));
  insts.push_back(I::measure(0, 0));
  insts.push_back(I::x(1).if_parity({0}));
  insts.push_back(I::measure(1, 1));
  Circuit full(nq, 2, insts);
  const std::string text = emit_qasm(full);
  Circuit back = parse_qasm(text);
  EXPECT_EQ(back, full);
  EXPECT_EQ(emit_qasm(back), text);
}

INSTANTIATE_TEST_SUITE_P(Random, RoundTrip, ::testing::Range<std::uint64_t>(1, 51));

TEST(Fuzz, ParserOnlyThrowsParseError) {
  const std::string seed = std::string(kHeader) +
                           "qreg q[3];\ncreg c[1];\nh q[0];\ncx q[0],q[1];\nrz(pi/4*2) q[2];\n"
                           "measure q[0] -> c[0];\nif(c==1) x q[1];\nbarrier q;\n";
  const std::string alphabet = "qc[](){};,->=+-*/^.0123456789 \n\"hxyzpi";
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 4000; ++iter) {
    std::string text = seed;
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0:
          text.insert(pos, 1, alphabet[rng() % alphabet.size()]);
          break;
        case 1:
          if (pos < text.size()) text.erase(pos, 1);
          break;
        default:
          if (pos < text.size()) text[pos] = static_cast<char>(rng() % 256);
          break;
      }
    }
    try {
      Circuit c = parse_qasm(text);
      EXPECT_TRUE(validate(c).empty());
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      ADD_FAILURE() << "unexpected " << e.what() << " for:\n" << text;
    }
  }
}

}  // namespace
}  // namespace qdepth
