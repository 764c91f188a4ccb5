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

#include "qdepth/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qdepth/ghz.hpp"
#include "qdepth/sim/oracle.hpp"

namespace qdepth {

namespace {

constexpr double kWholeCircuitTolerance = 1e-9;

bool has_measurement(const Circuit& c) {
  return std::any_of(c.instructions().begin(), c.instructions().end(),
                     [](const Instruction& i) { return i.kind == GateKind::Measure; });
}

// Empty when the check could not run on these circuits.
std::optional<bool> whole_circuit_equivalent(const Circuit& in, const Circuit& out,
                                             std::uint32_t max_qubits) {
  if (in.num_qubits() > max_qubits) return std::nullopt;
  try {
    if (!has_measurement(in) && !has_measurement(out)) {
      return sim::equivalent_unitary(in, out, kWholeCircuitTolerance);
    }
    return sim::equivalent_on_zero(in, out, kWholeCircuitTolerance);
  } catch (const sim::OracleError&) {
    return std::nullopt;
  }
}

nlohmann::json stats_json(const DepthReport& s) {
  return {{"depth", s.depth},
          {"gate_count", s.gate_count},
          {"two_qubit_count", s.two_qubit_count},
          {"measure_count", s.measure_count}};
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

const char* to_string(GhzMode mode) {
  switch (mode) {
    case GhzMode::Off:
      return "off";
    case GhzMode::Robust:
      return "robust";
    case GhzMode::Parallel:
      return "parallel";
  }
  return "?";
}

std::optional<Pass> pass_from_string(const std::string& s) {
  if (s == "ghz") return Pass::Ghz;
  if (s == "chains") return Pass::Chains;
  return std::nullopt;
}

std::optional<GhzMode> ghz_mode_from_string(const std::string& s) {
  for (GhzMode m : {GhzMode::Off, GhzMode::Robust, GhzMode::Parallel}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

std::optional<ChainMode> chain_mode_from_string(const std::string& s) {
  for (ChainMode m : {ChainMode::Off, ChainMode::Conservative, ChainMode::Always, ChainMode::Fast}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

std::optional<Suite> suite_from_string(const std::string& s) {
  if (s == "ghz") return Suite::Ghz;
  if (s == "chains") return Suite::Chains;
  if (s == "vqe") return Suite::Vqe;
  return std::nullopt;
}

CompileResult compile(const Circuit& input, const CompileOptions& options) {
  check(options.passes);
  CompileResult result{input, {}};
  Report& report = result.report;
  report.input_stats = stats(input);

  Circuit current = input;
  for (Pass pass : options.order) {
    if (pass == Pass::Ghz) {
      GhzPassResult ghz = apply_ghz_pass(current, options.passes.ghz_mode);
      if (options.passes.ghz_mode != GhzMode::Off) {
        report.ghz_sites_found += ghz.sites.size();
        report.ghz_sites_replaced += ghz.replaced;
      }
      current = std::move(ghz.circuit);
    } else {
      ChainPassResult chains = gate_and_apply(current, options.passes);
      report.chains_found += chains.decisions.size();
      report.chains_applied += chains.chains_applied;
      for (const GateDecision& d : chains.decisions) {
        report.decisions.push_back(
            {d.candidate.start_index(), to_string(d.candidate.kind), d.candidate.gate_count(),
             d.transformation ? std::optional<std::string>(to_string(*d.transformation))
                              : std::nullopt,
             d.depth_before, d.depth_after, d.applied});
      }
      if (chains.failure) {
        report.verification_error = chains.failure->message;
        report.output_stats = report.input_stats;
        return result;
      }
      current = std::move(chains.circuit);
    }
  }

  if (options.passes.verify) {
    const std::optional<bool> ok =
        whole_circuit_equivalent(input, current, options.passes.max_verify_qubits);
    if (ok == false) {
      report.verification_error = "compiled circuit is not equivalent to its input";
      report.output_stats = report.input_stats;
      return result;
    }
    report.verified = ok.has_value();
  }

  report.output_stats = stats(current);
  report.relative_depth = static_cast<std::int64_t>(report.input_stats.depth) -
                          static_cast<std::int64_t>(report.output_stats.depth);
  result.circuit = std::move(current);
  return result;
}

std::string to_json(const Report& report, int indent) {
  nlohmann::json decisions = nlohmann::json::array();
  for (const DecisionSummary& d : report.decisions) {
    decisions.push_back({{"start_index", d.start_index},
                         {"kind", d.kind},
                         {"gate_count", d.gate_count},
                         {"transformation", optional_json(d.transformation)},
                         {"depth_before", optional_json(d.depth_before)},
                         {"depth_after", optional_json(d.depth_after)},
                         {"applied", d.applied}});
  }
  nlohmann::json j = {{"input_stats", stats_json(report.input_stats)},
                      {"output_stats", stats_json(report.output_stats)},
                      {"ghz_sites_found", report.ghz_sites_found},
                      {"ghz_sites_replaced", report.ghz_sites_replaced},
                      {"chains_found", report.chains_found},
                      {"chains_applied", report.chains_applied},
                      {"decisions", decisions},
                      {"verified", report.verified},
                      {"relative_depth", report.relative_depth}};
  if (report.verification_error) j["verification_error"] = *report.verification_error;
  return j.dump(indent);
}

std::string to_json(const DepthReport& s, int indent) { return stats_json(s).dump(indent); }

NRange parse_range(const std::string& text) {
  std::vector<std::uint32_t> parts;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ':')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(field, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range field '" + field + "'");
    }
    if (used != field.size() || v > UINT32_MAX) {
      throw std::invalid_argument("bad range field '" + field + "'");
    }
    parts.push_back(static_cast<std::uint32_t>(v));
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("range must be start:stop[:step]");
  }
  NRange r{parts[0], parts[1], parts.size() == 3 ? parts[2] : 1};
  if (r.step == 0) throw std::invalid_argument("range step must be positive");
  if (r.start >= r.stop) throw std::invalid_argument("range is empty");
  return r;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<std::uint32_t> sizes;
  for (std::uint64_t n = options.range.start; n < options.range.stop; n += options.range.step) {
    sizes.push_back(static_cast<std::uint32_t>(n));
  }
  std::vector<BenchRow> rows;
  auto add = [&](std::string name, std::uint32_t n, std::uint32_t reps, std::string variant,
                 const Circuit& c, const CompileOptions& opts) {
    const CompileResult r = compile(c, opts);
    rows.push_back({std::move(name), n, reps, std::move(variant), r.report.input_stats,
                    r.report.output_stats});
  };
  auto chains_only = [&](bool cz_to_cx) {
    CompileOptions o;
    o.passes.ghz_mode = GhzMode::Off;
    o.passes.chain_mode = options.chain_mode;
    o.passes.cz_to_cx = cz_to_cx;
    return o;
  };

  switch (options.suite) {
    case Suite::Ghz:
      for (std::uint32_t n : sizes) {
        if (n < 2) throw std::invalid_argument("ghz suite needs n >= 2");
        const Circuit c = gen_ghz_standard(n);
        for (GhzMode m : {GhzMode::Off, GhzMode::Robust, GhzMode::Parallel}) {
          CompileOptions o;
          o.passes.ghz_mode = m;
          o.passes.chain_mode = ChainMode::Off;
          add("ghz", n, 1, m == GhzMode::Off ? "standard" : to_string(m), c, o);
        }
      }
      break;
    case Suite::Chains:
      for (std::uint32_t n : sizes) {
        if (n < 2) throw std::invalid_argument("chains suite needs n >= 2");
        const std::string mode = to_string(options.chain_mode);
        add("cx_forward", n, 1, mode, gen_cx_chain(n, Direction::Forward), chains_only(false));
        add("cx_reverse", n, 1, mode, gen_cx_chain(n, Direction::Reverse), chains_only(false));
        add("cz", n, 1, mode, gen_cz_chain(n), chains_only(false));
        add("cz_to_cx", n, 1, mode, gen_cz_chain(n), chains_only(true));
      }
      break;
    case Suite::Vqe:
      for (AnsatzFamily f : options.families) {
        for (Entanglement e : options.entanglements) {
          for (std::uint32_t reps : options.reps) {
            for (std::uint32_t n : sizes) {
              const Circuit c = gen_ansatz({f, n, reps, e, options.seed});
              add(std::string(to_string(f)) + "_" + std::string(to_string(e)), n, reps,
                  to_string(options.chain_mode), c, chains_only(false));
            }
          }
        }
      }
      break;
  }
  return rows;
}

std::string csv_header() {
  return std::string("# qdepth ") + QDEPTH_VERSION + " rng=" + std::string(kRngId) +
         "\nname,n,reps,variant,depth_before,depth_after,gates_before,gates_after,"
         "measures_before,measures_after,relative_depth\n";
}

std::string csv_row(const BenchRow& r) {
  std::ostringstream os;
  os << r.name << ',' << r.n << ',' << r.reps << ',' << r.variant << ',' << r.before.depth << ','
     << r.after.depth << ',' << r.before.gate_count << ',' << r.after.gate_count << ','
     << r.before.measure_count << ',' << r.after.measure_count << ',' << r.relative_depth()
     << '\n';
  return os.str();
}

}  // namespace qdepth
