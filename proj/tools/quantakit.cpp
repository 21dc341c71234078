// Copyright 2026 The quantakit Authors
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

// quantakit: materialize quantamorphisms, run states, find complements and
// synthesize circuits from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "quantakit/checks.hpp"
#include "quantakit/circuit.hpp"
#include "quantakit/dump.hpp"
#include "quantakit/errors.hpp"
#include "quantakit/gates.hpp"
#include "quantakit/quanta.hpp"
#include "quantakit/relalg.hpp"

namespace qk = quantakit;

namespace {

// list_basis(4) has 62 elements; beyond that the dense matrices get silly.
constexpr std::size_t kMaxlenCap = 4;

struct RunConfig {
  std::string step;
  std::string maxlen = "2";
  double tol = qk::kDefaultTol;
  std::string out;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

// "pinned16" or a length bound no larger than the cap.
qk::FinBasis basis_for(const std::string& maxlen) {
  if (maxlen == "pinned16") return qk::pinned16_basis();
  std::size_t pos = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(maxlen, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != maxlen.size()) {
    throw qk::ParseError("--maxlen expects a number or pinned16, got '" +
                         maxlen + "'");
  }
  if (n > kMaxlenCap) {
    throw qk::SizeLimitExceeded("--maxlen " + maxlen + " exceeds the cap of " +
                                std::to_string(kMaxlenCap));
  }
  return qk::list_basis(n);
}

qk::StepOp step_for(const RunConfig& cfg) {
  if (!(cfg.tol > 0)) throw std::invalid_argument("--tol must be positive");
  return qk::StepOp(qk::GateLibrary::standard().get(cfg.step), cfg.tol);
}

qk::CMatrix folded_matrix(const RunConfig& cfg) {
  return qk::materialize(qk::quantamorphism(step_for(cfg),
                                            basis_for(cfg.maxlen)));
}

std::string block_text(const qk::FinBasis& src,
                       const std::vector<std::size_t>& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) s += ", ";
    s += src[block[i]].str();
  }
  return s + "}";
}

int cmd_check(const std::string& suite) {
  std::vector<qk::SuiteReport> reports;
  if (suite == "all") {
    reports = qk::run_all_suites();
  } else {
    reports.push_back(qk::run_suite(suite));
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::printf("%-10s %s  passed %zu  failed %zu  (%.2f s)\n", r.name.c_str(),
                r.ok() ? "PASS" : "FAIL", r.passed, r.failed, r.seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantamorphisms, relations and reversible circuits"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* matrix = app.add_subcommand("matrix", "Materialize ⦇step⦈");
  matrix->add_option("--step", cfg.step, "Registered gate name")->required();
  matrix->add_option("--maxlen", cfg.maxlen, "List length bound or pinned16");
  matrix->add_option("--tol", cfg.tol, "Unitarity tolerance");
  matrix->add_option("--out", cfg.out, "Output file");
  matrix->add_option("--format", cfg.format)->check(
      CLI::IsMember({"text", "json"}));

  std::string input;
  auto* run = app.add_subcommand("run", "Apply ⦇step⦈ to one basis label");
  run->add_option("--step", cfg.step)->required();
  run->add_option("--input", input, "Input label, e.g. ([0,1],0)")->required();
  run->add_option("--tol", cfg.tol);
  run->add_option("--out", cfg.out);
  run->add_option("--format", cfg.format)->check(
      CLI::IsMember({"text", "json"}));

  std::string table;
  bool labels = false;
  auto* complement =
      app.add_subcommand("complement", "Minimal complements of a function");
  complement->add_option("table", table, "Truth-table file")->required();
  complement->add_flag("--labels", labels, "Print labelled quotient matrices");
  complement->add_option("--out", cfg.out);

  std::string matrix_file, qasm_out;
  bool clifford_t = false;
  auto* synth = app.add_subcommand("synth", "Synthesize a permutation circuit");
  auto* synth_step = synth->add_option("--step", cfg.step);
  auto* synth_matrix =
      synth->add_option("--matrix", matrix_file, "Matrix dump file");
  synth_step->excludes(synth_matrix);
  synth->add_option("--maxlen", cfg.maxlen);
  synth->add_option("--tol", cfg.tol);
  synth->add_option("--qasm", qasm_out, "Write QASM here");
  synth->add_flag("--clifford-t", clifford_t, "Expand Toffolis to Clifford+T");

  std::string qasm_in, bits;
  auto* simulate = app.add_subcommand("simulate", "Run a QASM file classically");
  simulate->add_option("file", qasm_in)->required();
  simulate->add_option("bits", bits, "Input bit string, qubit 0 first")
      ->required();

  std::string suite;
  auto* check = app.add_subcommand("check", "Run property suites");
  check->add_option("suite", suite, "relalg|vecmonad|gates|quanta|circuitgen|all")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*matrix) {
      qk::CMatrix m = folded_matrix(cfg);
      emit(cfg.format == "json" ? qk::dump_matrix_json(m) + "\n"
                                : qk::dump_matrix(m),
           cfg.out);
    } else if (*run) {
      qk::StepOp step = step_for(cfg);
      qk::Label in = qk::Label::parse(input);
      qk::AmpVec v = qk::run_quanta(step, in);
      std::size_t n = in.first().items().size();
      qk::FinBasis order = qk::list_basis(n, step.items_out(), step.payload());
      emit(cfg.format == "json" ? qk::dump_state_json(v, order) + "\n"
                                : qk::dump_state(v, order),
           cfg.out);
    } else if (*complement) {
      qk::Rel f = qk::parse_truth_table(read_file(table));
      std::ostringstream os;
      auto cs = qk::minimal_complements(f);
      os << cs.size() << " minimal complement(s)\n";
      for (std::size_t i = 0; i < cs.size(); ++i) {
        os << i + 1 << ":";
        for (const auto& b : cs[i].blocks) os << " " << block_text(f.src(), b);
        os << "\n";
        if (labels) os << cs[i].quotient.str(true) << "\n";
      }
      emit(os.str(), cfg.out);
    } else if (*synth) {
      qk::CMatrix m;
      qk::Encoding enc = qk::Encoding::pinned16();
      if (!matrix_file.empty()) {
        m = qk::parse_matrix_dump(read_file(matrix_file));
        enc = qk::Encoding::natural(m.src);
      } else if (!cfg.step.empty()) {
        m = folded_matrix(cfg);
        if (cfg.maxlen != "pinned16") enc = qk::Encoding::natural(m.src);
      } else {
        throw std::invalid_argument("synth needs --step or --matrix");
      }
      qk::Circuit c = qk::synth_permutation(m, enc);
      if (clifford_t) c = qk::expand_toffoli(c);
      std::string qasm = qk::export_qasm(c);
      if (qasm_out.empty()) {
        std::cout << qasm;
      } else {
        emit(qasm, qasm_out);
      }
      std::cout << qk::metrics_json(qk::metrics(c)) << "\n";
    } else if (*simulate) {
      qk::Circuit c = qk::parse_qasm(read_file(qasm_in));
      std::cout << qk::simulate(c, bits) << "\n";
    } else if (*check) {
      return cmd_check(suite);
    }
  } catch (const std::exception& e) {
    std::cerr << "quantakit: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
