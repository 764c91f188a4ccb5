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

// qdepth: depth-reducing rewrites for OpenQASM 2.0 circuits.
//
//   qdepth compile --in a.qasm --out b.qasm [--report r.json] ...
//   qdepth depth --in a.qasm
//   qdepth bench --suite ghz|chains|vqe --n-range 4:65:4 [--csv out.csv]
//
// Exit codes: 0 success, 1 parse error, 2 verification failure, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdepth/pipeline.hpp"
#include "qdepth/qasm.hpp"

namespace {

enum Exit { kOk = 0, kParse = 1, kVerify = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw IoError("cannot write " + path);
}

qdepth::Circuit load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return qdepth::parse_qasm(text);
  } catch (qdepth::ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

template <typename T, typename F>
T lookup(const std::string& flag, const std::string& value, F from_string) {
  if (auto v = from_string(value)) return *v;
  throw CLI::ValidationError(flag, "unknown value '" + value + "'");
}

struct CompileFlags {
  std::string in, out, report;
  std::string ghz = "robust", chains = "conservative", passes = "ghz,chains";
  std::size_t min_chain_gates = 5, depth_scope = 100;
  std::uint32_t max_verify_qubits = 10;
  bool cz_to_cx = false, verify = false;
};

int run_compile(const CompileFlags& f) {
  qdepth::CompileOptions opts;
  opts.passes.ghz_mode = lookup<qdepth::GhzMode>("--ghz", f.ghz, qdepth::ghz_mode_from_string);
  opts.passes.chain_mode =
      lookup<qdepth::ChainMode>("--chains", f.chains, qdepth::chain_mode_from_string);
  opts.passes.min_chain_gates = f.min_chain_gates;
  opts.passes.depth_scope = f.depth_scope;
  opts.passes.cz_to_cx = f.cz_to_cx;
  opts.passes.verify = f.verify;
  opts.passes.max_verify_qubits = f.max_verify_qubits;
  opts.order.clear();
  std::stringstream ss(f.passes);
  for (std::string p; std::getline(ss, p, ',');) {
    opts.order.push_back(lookup<qdepth::Pass>("--passes", p, qdepth::pass_from_string));
  }

  const qdepth::Circuit input = load(f.in);
  const qdepth::CompileResult result = qdepth::compile(input, opts);
  if (!f.report.empty()) write_file(f.report, qdepth::to_json(result.report) + "\n");
  if (result.failed()) {
    std::cerr << "qdepth: verification failed: " << *result.report.verification_error << "\n";
    return kVerify;
  }
  write_file(f.out, qdepth::emit_qasm(result.circuit));
  return kOk;
}

struct BenchFlags {
  std::string suite = "ghz", range = "4:65:4", chains = "conservative", csv;
  std::vector<std::uint32_t> reps{1};
  std::vector<std::string> families, entanglements;
  std::uint64_t seed = 7;
};

int run_bench(const BenchFlags& f) {
  qdepth::BenchOptions opts;
  opts.suite = lookup<qdepth::Suite>("--suite", f.suite, qdepth::suite_from_string);
  try {
    opts.range = qdepth::parse_range(f.range);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--n-range", e.what());
  }
  opts.reps = f.reps;
  opts.seed = f.seed;
  opts.chain_mode = lookup<qdepth::ChainMode>("--chains", f.chains, qdepth::chain_mode_from_string);
  if (!f.families.empty()) {
    opts.families.clear();
    for (const auto& s : f.families) {
      opts.families.push_back(lookup<qdepth::AnsatzFamily>(
          "--family", s, [](const std::string& v) { return qdepth::family_from_string(v); }));
    }
  }
  if (!f.entanglements.empty()) {
    opts.entanglements.clear();
    for (const auto& s : f.entanglements) {
      opts.entanglements.push_back(lookup<qdepth::Entanglement>(
          "--entanglement", s,
          [](const std::string& v) { return qdepth::entanglement_from_string(v); }));
    }
  }

  std::string csv = qdepth::csv_header();
  for (const qdepth::BenchRow& row : qdepth::run_bench(opts)) csv += qdepth::csv_row(row);
  if (f.csv.empty()) {
    std::cout << csv;
  } else {
    write_file(f.csv, csv);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth-reducing rewrites for OpenQASM 2.0 circuits", "qdepth"};
  app.set_version_flag("--version", std::string(QDEPTH_VERSION));
  app.require_subcommand(1);

  CompileFlags cf;
  CLI::App* compile = app.add_subcommand("compile", "Rewrite a circuit");
  compile->add_option("--in", cf.in, "Input OpenQASM 2.0 file")->required();
  compile->add_option("--out", cf.out, "Output OpenQASM 2.0 file")->required();
  compile->add_option("--report", cf.report, "JSON report path");
  compile->add_option("--ghz", cf.ghz, "off|robust|parallel")->capture_default_str();
  compile->add_option("--chains", cf.chains, "off|conservative|always|fast")->capture_default_str();
  compile->add_option("--passes", cf.passes, "Comma-separated pass order")->capture_default_str();
  compile->add_option("--min-chain-gates", cf.min_chain_gates)->capture_default_str();
  compile->add_option("--depth-scope", cf.depth_scope)->capture_default_str();
  compile->add_option("--max-verify-qubits", cf.max_verify_qubits)->capture_default_str();
  compile->add_flag("--cz-to-cx", cf.cz_to_cx, "Rewrite CZ chains in the CX basis");
  compile->add_flag("--verify", cf.verify, "Check rewrites with the statevector oracle");

  std::string depth_in;
  CLI::App* depth = app.add_subcommand("depth", "Print depth statistics as JSON");
  depth->add_option("--in", depth_in, "Input OpenQASM 2.0 file")->required();

  BenchFlags bf;
  CLI::App* bench = app.add_subcommand("bench", "Emit scaling data as CSV");
  bench->add_option("--suite", bf.suite, "ghz|chains|vqe")->capture_default_str();
  bench->add_option("--n-range", bf.range, "start:stop:step, stop exclusive")->capture_default_str();
  bench->add_option("--reps", bf.reps, "Ansatz repetitions")->capture_default_str();
  bench->add_option("--family", bf.families, "efficient_su2|real_amplitudes|two_local");
  bench->add_option("--entanglement", bf.entanglements, "linear|reverse_linear|circular|sca|full");
  bench->add_option("--seed", bf.seed)->capture_default_str();
  bench->add_option("--chains", bf.chains, "Chain mode")->capture_default_str();
  bench->add_option("--csv", bf.csv, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*compile) return run_compile(cf);
    if (*depth) {
      std::cout << qdepth::to_json(qdepth::stats(load(depth_in))) << "\n";
      return kOk;
    }
    return run_bench(bf);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "qdepth: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "qdepth: " << e.what() << "\n";
    return kParse;
  }
}
