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

#include <stdexcept>
#include <string>
#include <string_view>

#include "qdepth/circuit.hpp"

namespace qdepth {

struct SourceSpan {
  int line = 1;
  int column = 1;
};

enum class ParseErrorKind { Syntax, UnsupportedConstruct, Semantic };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, ParseErrorKind kind, const std::string& message);

  [[nodiscard]] SourceSpan span() const { return span_; }
  [[nodiscard]] ParseErrorKind kind() const { return kind_; }
  /// Message without the location prefix.
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  SourceSpan span_;
  ParseErrorKind kind_;
  std::string message_;
};

/// Parses the OpenQASM 2.0 subset: h x y z rx ry rz cx cz measure barrier,
/// plus `if(creg==1)` on single-bit registers. Registers are flattened in
/// declaration order. Throws ParseError; never anything else.
Circuit parse_qasm(std::string_view text);

/// Deterministic QASM text. Multi-bit parity conditions are lowered to one
/// single-bit `if` per bit, which is only sound for self-inverse gates;
/// a parity condition on more than one bit attached to a rotation throws
/// std::logic_error. Registers holding conditioned bits are split into
/// one-bit registers so every condition is expressible.
std::string emit_qasm(const Circuit& c);

}  // namespace qdepth
