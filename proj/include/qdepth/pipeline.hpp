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
#include <optional>
#include <string>
#include <vector>

#include "qdepth/bench.hpp"
#include "qdepth/circuit.hpp"
#include "qdepth/improve.hpp"

namespace qdepth {

enum class Pass { Ghz, Chains };

struct CompileOptions {
  PassConfig passes;
  std::vector<Pass> order{Pass::Ghz, Pass::Chains};
};

struct DecisionSummary {
  std::size_t start_index = 0;
  std::string kind;
  std::size_t gate_count = 0;
  std::optional<std::string> transformation;
  std::optional<std::size_t> depth_before;
  std::optional<std::size_t> depth_after;
  bool applied = false;
};

struct Report {
  DepthReport input_stats;
  DepthReport output_stats;
  std::size_t ghz_sites_found = 0;
  std::size_t ghz_sites_replaced = 0;
  std::size_t chains_found = 0;
  std::size_t chains_applied = 0;
  std::vector<DecisionSummary> decisions;
  bool verified = false;
  std::int64_t relative_depth = 0;
  std::optional<std::string> verification_error;
};

struct CompileResult {
  Circuit circuit;
  Report report;
  [[nodiscard]] bool failed() const { return report.verification_error.has_value(); }
};

/// Runs the passes in `options.order`. With `verify` set, chain windows are
/// checked as they are rewritten and the whole circuit is checked at the
/// end when it is small enough; `report.verified` is true only when every
/// check that ran passed and the whole-circuit check ran. On failure the
/// input circuit is returned.
CompileResult compile(const Circuit& input, const CompileOptions& options);

std::string to_json(const Report& report, int indent = 2);
std::string to_json(const DepthReport& stats, int indent = -1);

std::optional<Pass> pass_from_string(const std::string& s);
std::optional<GhzMode> ghz_mode_from_string(const std::string& s);
std::optional<ChainMode> chain_mode_from_string(const std::string& s);
const char* to_string(GhzMode mode);

enum class Suite { Ghz, Chains, Vqe };

std::optional<Suite> suite_from_string(const std::string& s);

struct NRange {
  std::uint32_t start = 0;
  std::uint32_t stop = 0;  ///< exclusive
  std::uint32_t step = 1;
};

/// Parses "start:stop:step" (step optional). Throws std::invalid_argument.
NRange parse_range(const std::string& text);

struct BenchOptions {
  Suite suite = Suite::Ghz;
  NRange range{4, 65, 4};
  std::vector<std::uint32_t> reps{1};
  std::vector<AnsatzFamily> families{AnsatzFamily::EfficientSu2, AnsatzFamily::RealAmplitudes,
                                     AnsatzFamily::TwoLocal};
  std::vector<Entanglement> entanglements{Entanglement::Linear, Entanglement::ReverseLinear,
                                          Entanglement::Circular, Entanglement::Sca,
                                          Entanglement::Full};
  std::uint64_t seed = 7;
  ChainMode chain_mode = ChainMode::Conservative;
};

struct BenchRow {
  std::string name;
  std::uint32_t n = 0;
  std::uint32_t reps = 0;
  std::string variant;
  DepthReport before;
  DepthReport after;

  [[nodiscard]] std::int64_t relative_depth() const {
    return static_cast<std::int64_t>(before.depth) - static_cast<std::int64_t>(after.depth);
  }
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Comment line with tool version and RNG id, then the column header.
std::string csv_header();
std::string csv_row(const BenchRow& row);

}  // namespace qdepth
