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

#include "qdepth/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

namespace qdepth {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::UnsupportedConstruct: return "unsupported-construct";
    case ParseErrorKind::Semantic: return "semantic";
  }
  return "unknown";
}

namespace {

std::string format_error(SourceSpan span, ParseErrorKind kind, const std::string& message) {
  std::ostringstream os;
  os << span.line << ":" << span.column << ": " << to_string(kind) << " error: " << message;
  return os.str();
}

}  // namespace

ParseError::ParseError(SourceSpan span, ParseErrorKind kind, const std::string& message)
    : std::runtime_error(format_error(span, kind, message)),
      span_(span),
      kind_(kind),
      message_(message) {}

namespace {

// Registers larger than this are rejected; the IR indexes qubits with 32 bits
// and nothing downstream is meant for millions of wires.
constexpr std::uint64_t kMaxWires = 1u << 24;
constexpr int kMaxExprNesting = 128;

enum class Tok { Ident, Int, Real, String, Symbol, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.span = {line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.type = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        lex_number(t);
      } else if (c == '"') {
        t.type = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
        if (pos_ >= src_.size() || src_[pos_] != '"') {
          throw ParseError(t.span, ParseErrorKind::Syntax, "unterminated string literal");
        }
        advance();
      } else {
        t.type = Tok::Symbol;
        if (src_.substr(pos_, 2) == "->" || src_.substr(pos_, 2) == "==") {
          t.text = std::string(src_.substr(pos_, 2));
          advance();
          advance();
        } else if (std::string_view(";,[](){}+-*/^").find(c) != std::string_view::npos) {
          t.text = std::string(1, advance());
        } else {
          throw ParseError(t.span, ParseErrorKind::Syntax,
                           "unexpected character '" + printable(c) + "'");
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
    return buf;
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    t.type = Tok::Int;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text += advance();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      t.type = Tok::Real;
      t.text += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      t.type = Tok::Real;
      t.text += advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) t.text += advance();
      const std::size_t before = t.text.size();
      digits();
      if (t.text.size() == before) {
        throw ParseError(t.span, ParseErrorKind::Syntax, "malformed exponent in number");
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct RegInfo {
  std::uint32_t offset = 0;
  std::uint32_t size = 0;
};

struct Operand {
  const RegInfo* reg = nullptr;
  std::optional<std::uint32_t> index;  // nullopt: whole register
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Circuit run() {
    header();
    while (peek().type != Tok::End) statement();
    Circuit c(total_qubits_, total_clbits_, std::move(body_));
    c.set_registers(std::move(qreg_order_), std::move(creg_order_));
    return c;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_symbol(std::string_view s) const {
    return peek().type == Tok::Symbol && peek().text == s;
  }
  [[noreturn]] void fail(const Token& t, ParseErrorKind kind, const std::string& msg) const {
    throw ParseError(t.span, kind, msg);
  }
  std::string describe(const Token& t) const {
    if (t.type == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }
  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) {
      fail(peek(), ParseErrorKind::Syntax,
           "expected '" + std::string(s) + "' but found " + describe(peek()));
    }
    take();
  }
  const Token& expect_ident() {
    if (peek().type != Tok::Ident) {
      fail(peek(), ParseErrorKind::Syntax, "expected identifier but found " + describe(peek()));
    }
    return take();
  }
  std::uint64_t expect_uint() {
    const Token& t = peek();
    if (t.type != Tok::Int) fail(t, ParseErrorKind::Syntax, "expected integer but found " + describe(t));
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(t, ParseErrorKind::Semantic, "integer literal out of range");
    }
    take();
    return v;
  }

  void header() {
    const Token& kw = peek();
    if (kw.type != Tok::Ident || kw.text != "OPENQASM") {
      fail(kw, ParseErrorKind::Syntax, "missing 'OPENQASM 2.0;' header");
    }
    take();
    const Token& ver = peek();
    if (ver.type != Tok::Real && ver.type != Tok::Int) {
      fail(ver, ParseErrorKind::Syntax, "expected version number");
    }
    if (ver.text != "2.0" && ver.text != "2") {
      fail(ver, ParseErrorKind::UnsupportedConstruct, "only OpenQASM 2.0 is supported");
    }
    take();
    expect_symbol(";");
  }

  void statement() {
    const Token& t = peek();
    if (t.type != Tok::Ident) {
      fail(t, ParseErrorKind::Syntax, "expected statement but found " + describe(t));
    }
    if (t.text == "include") return include();
    if (t.text == "qreg" || t.text == "creg") return declaration();
    if (t.text == "measure") return measure(std::nullopt);
    if (t.text == "barrier") return barrier();
    if (t.text == "if") return conditional();
    if (t.text == "OPENQASM") fail(t, ParseErrorKind::Syntax, "duplicate header");
    gate(std::nullopt);
  }

  void include() {
    take();
    const Token& file = peek();
    if (file.type != Tok::String) fail(file, ParseErrorKind::Syntax, "expected file name string");
    if (file.text != "qelib1.inc") {
      fail(file, ParseErrorKind::UnsupportedConstruct, "cannot include '" + file.text + "'");
    }
    take();
    expect_symbol(";");
  }

  void declaration() {
    const Token& kw = take();
    const bool quantum = kw.text == "qreg";
    const Token& name = expect_ident();
    expect_symbol("[");
    const Token& size_tok = peek();
    const std::uint64_t size = expect_uint();
    expect_symbol("]");
    expect_symbol(";");
    if (qregs_.count(name.text) || cregs_.count(name.text)) {
      fail(name, ParseErrorKind::Semantic, "register '" + name.text + "' already declared");
    }
    if (size == 0) fail(size_tok, ParseErrorKind::Semantic, "register size must be positive");
    std::uint32_t& total = quantum ? total_qubits_ : total_clbits_;
    if (total + size > kMaxWires) fail(size_tok, ParseErrorKind::Semantic, "register too large");
    RegInfo info{total, static_cast<std::uint32_t>(size)};
    total += static_cast<std::uint32_t>(size);
    (quantum ? qregs_ : cregs_)[name.text] = info;
    (quantum ? qreg_order_ : creg_order_).push_back({name.text, info.size});
  }

  Operand operand(bool quantum) {
    const Token& name = expect_ident();
    auto& table = quantum ? qregs_ : cregs_;
    auto it = table.find(name.text);
    if (it == table.end()) {
      fail(name, ParseErrorKind::Semantic,
           std::string("undeclared ") + (quantum ? "quantum" : "classical") + " register '" +
               name.text + "'");
    }
    Operand op{&it->second, std::nullopt, name.span};
    if (is_symbol("[")) {
      take();
      const Token& idx_tok = peek();
      const std::uint64_t idx = expect_uint();
      expect_symbol("]");
      if (idx >= it->second.size) {
        fail(idx_tok, ParseErrorKind::Semantic,
             "index " + std::to_string(idx) + " out of range for register '" + name.text + "'");
      }
      op.index = static_cast<std::uint32_t>(idx);
    }
    return op;
  }

  std::vector<Operand> operand_list() {
    std::vector<Operand> ops{operand(true)};
    while (is_symbol(",")) {
      take();
      ops.push_back(operand(true));
    }
    return ops;
  }

  /// Expands register-wide operands (QASM broadcast) into per-index tuples.
  std::vector<std::vector<std::uint32_t>> broadcast(const std::vector<Operand>& ops) {
    std::optional<std::uint32_t> width;
    for (const Operand& op : ops) {
      if (op.index) continue;
      if (width && *width != op.reg->size) {
        fail(Token{Tok::Ident, "", op.span}, ParseErrorKind::Semantic,
             "register sizes differ in broadcast");
      }
      width = op.reg->size;
    }
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t k = 0; k < width.value_or(1); ++k) {
      std::vector<std::uint32_t> row;
      for (const Operand& op : ops) row.push_back(op.reg->offset + op.index.value_or(k));
      out.push_back(std::move(row));
    }
    return out;
  }

  void add(Instruction inst, SourceSpan span) {
    for (std::size_t a = 0; a < inst.qubits.size(); ++a) {
      for (std::size_t b = a + 1; b < inst.qubits.size(); ++b) {
        if (inst.qubits[a] == inst.qubits[b]) {
          throw ParseError(span, ParseErrorKind::Semantic, "duplicate operand");
        }
      }
    }
    body_.push_back(std::move(inst));
  }

  void measure(const std::optional<Condition>& cond) {
    const Token& kw = take();
    if (cond) fail(kw, ParseErrorKind::UnsupportedConstruct, "conditional measurement");
    Operand q = operand(true);
    expect_symbol("->");
    Operand c = operand(false);
    expect_symbol(";");
    const std::uint32_t qn = q.index ? 1 : q.reg->size;
    const std::uint32_t cn = c.index ? 1 : c.reg->size;
    if (q.index.has_value() != c.index.has_value() || qn != cn) {
      fail(kw, ParseErrorKind::Semantic, "measure operands have different sizes");
    }
    for (std::uint32_t k = 0; k < qn; ++k) {
      const Qubit qi = q.reg->offset + q.index.value_or(k);
      const Clbit ci = c.reg->offset + c.index.value_or(k);
      if (!measured_.insert(ci).second) {
        fail(c.span.line ? Token{Tok::Ident, "", c.span} : kw, ParseErrorKind::Semantic,
             "classical bit written more than once");
      }
      add(Instruction::measure(qi, ci), kw.span);
    }
  }

  void barrier() {
    const Token& kw = take();
    std::vector<Operand> ops = operand_list();
    expect_symbol(";");
    std::vector<Qubit> qs;
    for (const Operand& op : ops) {
      if (op.index) {
        qs.push_back(op.reg->offset + *op.index);
      } else {
        for (std::uint32_t k = 0; k < op.reg->size; ++k) qs.push_back(op.reg->offset + k);
      }
    }
    add(Instruction::barrier(std::move(qs)), kw.span);
  }

  void conditional() {
    const Token& kw = take();
    expect_symbol("(");
    const Token& reg = expect_ident();
    auto it = cregs_.find(reg.text);
    if (it == cregs_.end()) {
      fail(reg, ParseErrorKind::Semantic, "undeclared classical register '" + reg.text + "'");
    }
    expect_symbol("==");
    const Token& val_tok = peek();
    const std::uint64_t value = expect_uint();
    expect_symbol(")");
    if (it->second.size != 1) {
      fail(reg, ParseErrorKind::UnsupportedConstruct,
           "conditions are only supported on single-bit registers");
    }
    if (value != 1) {
      fail(val_tok, ParseErrorKind::UnsupportedConstruct,
           "only '==1' comparisons are supported");
    }
    const Token& next = peek();
    if (next.type != Tok::Ident) fail(next, ParseErrorKind::Syntax, "expected gate after if(...)");
    if (next.text == "if") fail(next, ParseErrorKind::UnsupportedConstruct, "nested if");
    if (next.text == "barrier") fail(next, ParseErrorKind::UnsupportedConstruct, "conditional barrier");
    Condition cond{{it->second.offset}};
    if (next.text == "measure") return measure(cond);
    (void)kw;
    gate(cond);
  }

  void gate(const std::optional<Condition>& cond) {
    const Token& name = take();
    static const std::set<std::string, std::less<>> kDefinitions = {"gate", "opaque", "reset"};
    if (kDefinitions.count(name.text)) {
      fail(name, ParseErrorKind::UnsupportedConstruct, "'" + name.text + "' is not supported");
    }
    std::optional<GateKind> kind = name.text == "CX" ? GateKind::CX : gate_from_name(name.text);
    if (!kind || *kind == GateKind::Measure || *kind == GateKind::Barrier) {
      fail(name, ParseErrorKind::UnsupportedConstruct, "unsupported gate '" + name.text + "'");
    }
    std::vector<double> params;
    if (is_symbol("(")) {
      take();
      if (!is_symbol(")")) {
        params.push_back(expression(0));
        while (is_symbol(",")) {
          take();
          params.push_back(expression(0));
        }
      }
      expect_symbol(")");
    }
    const std::size_t want_params = is_rotation(*kind) ? 1 : 0;
    if (params.size() != want_params) {
      fail(name, ParseErrorKind::Semantic,
           "gate '" + name.text + "' takes " + std::to_string(want_params) + " parameter(s)");
    }
    std::vector<Operand> ops = operand_list();
    expect_symbol(";");
    const std::size_t want_qubits = is_two_qubit(*kind) ? 2 : 1;
    if (ops.size() != want_qubits) {
      fail(name, ParseErrorKind::Semantic,
           "gate '" + name.text + "' takes " + std::to_string(want_qubits) + " qubit(s)");
    }
    for (auto& qs : broadcast(ops)) {
      Instruction inst{*kind, std::move(qs), {}, {}, {}};
      if (want_params) inst.angle = params.front();
      inst.condition = cond;
      add(std::move(inst), name.span);
    }
  }

  // Precedence climbing over + - * / ^ with unary minus.
  double expression(int depth) {
    double lhs = term(depth);
    while (is_symbol("+") || is_symbol("-")) {
      const bool plus = take().text == "+";
      const double rhs = term(depth);
      lhs = plus ? lhs + rhs : lhs - rhs;
    }
    return lhs;
  }

  double term(int depth) {
    double lhs = power(depth);
    while (is_symbol("*") || is_symbol("/")) {
      const bool mul = take().text == "*";
      const double rhs = power(depth);
      lhs = mul ? lhs * rhs : lhs / rhs;
    }
    return lhs;
  }

  double power(int depth) {
    const double base = unary(depth);
    if (is_symbol("^")) {
      take();
      return std::pow(base, power(depth + 1));
    }
    return base;
  }

  double unary(int depth) {
    if (depth > kMaxExprNesting) fail(peek(), ParseErrorKind::Syntax, "expression nested too deeply");
    if (is_symbol("-")) {
      take();
      return -unary(depth + 1);
    }
    if (is_symbol("+")) {
      take();
      return unary(depth + 1);
    }
    if (is_symbol("(")) {
      take();
      const double v = expression(depth + 1);
      expect_symbol(")");
      return v;
    }
    const Token& t = peek();
    if (t.type == Tok::Int || t.type == Tok::Real) {
      take();
      return std::strtod(t.text.c_str(), nullptr);
    }
    if (t.type == Tok::Ident && t.text == "pi") {
      take();
      return std::numbers::pi;
    }
    if (t.type == Tok::Ident) {
      fail(t, ParseErrorKind::UnsupportedConstruct, "unsupported identifier '" + t.text + "' in expression");
    }
    fail(t, ParseErrorKind::Syntax, "expected expression but found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, RegInfo, std::less<>> qregs_;
  std::map<std::string, RegInfo, std::less<>> cregs_;
  std::vector<Register> qreg_order_;
  std::vector<Register> creg_order_;
  std::uint32_t total_qubits_ = 0;
  std::uint32_t total_clbits_ = 0;
  std::set<Clbit> measured_;
  std::vector<Instruction> body_;
};

bool self_inverse(GateKind k) { return !is_rotation(k); }

struct Slot {
  std::string reg;
  std::uint32_t index = 0;
};

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

std::string emit_qasm(const Circuit& c) {
  // Bits that appear in conditions must live in one-bit registers.
  std::vector<bool> conditioned(c.num_clbits(), false);
  for (const Instruction& inst : c.instructions()) {
    if (!inst.condition) continue;
    if (inst.condition->bits.size() > 1 && !self_inverse(inst.kind)) {
      throw std::logic_error("emit_qasm: parity condition on a rotation cannot be lowered");
    }
    for (Clbit b : inst.condition->bits) conditioned.at(b) = true;
  }

  std::vector<Register> qregs = c.qregs();
  std::vector<Register> cregs_in = c.cregs();
  std::set<std::string> taken;
  for (const auto& r : qregs) taken.insert(r.name);
  for (const auto& r : cregs_in) taken.insert(r.name);

  std::vector<Register> cregs;
  std::uint32_t offset = 0;
  for (const Register& r : cregs_in) {
    bool split = false;
    for (std::uint32_t k = 0; k < r.size && r.size > 1; ++k) split = split || conditioned[offset + k];
    if (!split) {
      cregs.push_back(r);
    } else {
      for (std::uint32_t k = 0; k < r.size; ++k) {
        std::string name = r.name + "_" + std::to_string(k);
        while (taken.count(name)) name += "_";
        taken.insert(name);
        cregs.push_back({name, 1});
      }
    }
    offset += r.size;
  }

  auto slots = [](const std::vector<Register>& regs) {
    std::vector<Slot> out;
    for (const Register& r : regs) {
      for (std::uint32_t k = 0; k < r.size; ++k) out.push_back({r.name, k});
    }
    return out;
  };
  const std::vector<Slot> qslot = slots(qregs);
  const std::vector<Slot> cslot = slots(cregs);
  auto qref = [&](Qubit q) { return qslot.at(q).reg + "[" + std::to_string(qslot.at(q).index) + "]"; };
  auto cref = [&](Clbit b) { return cslot.at(b).reg + "[" + std::to_string(cslot.at(b).index) + "]"; };

  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  for (const Register& r : qregs) os << "qreg " << r.name << "[" << r.size << "];\n";
  for (const Register& r : cregs) os << "creg " << r.name << "[" << r.size << "];\n";

  for (const Instruction& inst : c.instructions()) {
    std::string body;
    if (inst.kind == GateKind::Measure) {
      body = "measure " + qref(inst.qubits.at(0)) + " -> " + cref(inst.clbit.value()) + ";";
    } else {
      body = std::string(gate_name(inst.kind));
      if (inst.angle) body += "(" + format_angle(*inst.angle) + ")";
      for (std::size_t i = 0; i < inst.qubits.size(); ++i) {
        body += (i ? "," : " ") + qref(inst.qubits[i]);
      }
      body += ";";
    }
    if (!inst.condition) {
      os << body << "\n";
      continue;
    }
    for (Clbit b : inst.condition->bits) {
      os << "if(" << cslot.at(b).reg << "==1) " << body << "\n";
    }
  }
  return os.str();
}

}  // namespace qdepth
