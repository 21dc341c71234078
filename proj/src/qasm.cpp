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

#include <map>
#include <regex>
#include <sstream>

#include "quantakit/circuit.hpp"
#include "quantakit/errors.hpp"

namespace quantakit {

namespace {

std::string qubit_name(const Circuit& c, int q) {
  if (q < c.data_qubits) return "q[" + std::to_string(q) + "]";
  return "anc[" + std::to_string(q - c.data_qubits) + "]";
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  c.validate();
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.data_qubits << "];\n";
  if (c.ancilla_qubits > 0) out << "qreg anc[" << c.ancilla_qubits << "];\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::X: out << "x "; break;
      case GateKind::CX: out << "cx "; break;
      case GateKind::CCX: out << "ccx "; break;
      case GateKind::H: out << "h "; break;
      case GateKind::T: out << "t "; break;
      case GateKind::Tdg: out << "tdg "; break;
      case GateKind::MCX:
        throw std::logic_error("export_qasm: decompose MCX gates first");
    }
    for (int q : g.controls) out << qubit_name(c, q) << ',';
    out << qubit_name(c, g.target) << ";\n";
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  static const std::regex qreg_re(R"(^qreg\s+([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]$)");
  static const std::regex gate_re(R"(^([a-z]+)\s+(.+)$)");
  static const std::regex arg_re(R"(^\s*([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]\s*$)");
  static const std::map<std::string, std::pair<GateKind, std::size_t>> kinds =
      {{"x", {GateKind::X, 1}},   {"cx", {GateKind::CX, 2}},
       {"ccx", {GateKind::CCX, 3}}, {"h", {GateKind::H, 1}},
       {"t", {GateKind::T, 1}},   {"tdg", {GateKind::Tdg, 1}}};

  Circuit c;
  // Registers in declaration order: the first holds data, the second ancillas.
  std::map<std::string, int> offset;
  std::map<std::string, int> reg_size;
  bool saw_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  // Statements are ';'-terminated; we accept one per line as we emit.
  while (std::getline(in, raw)) {
    ++line_no;
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError("qasm line " + std::to_string(line_no) + ": " + what);
    };
    if (auto cpos = raw.find("//"); cpos != std::string::npos) raw.resize(cpos);
    auto b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = raw.find_last_not_of(" \t\r");
    std::string line = raw.substr(b, e - b + 1);
    if (line.back() != ';') throw fail("missing ';'");
    line.pop_back();
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::smatch m;
    if (line.rfind("OPENQASM", 0) == 0) {
      if (line != "OPENQASM 2.0") throw fail("unsupported version");
      saw_header = true;
    } else if (line.rfind("include", 0) == 0) {
      continue;
    } else if (std::regex_match(line, m, qreg_re)) {
      if (offset.size() == 2) throw fail("at most two registers supported");
      int size = std::stoi(m[2]);
      offset[m[1]] = c.total_qubits();
      reg_size[m[1]] = size;
      if (offset.size() == 1) {
        c.data_qubits = size;
      } else {
        c.ancilla_qubits = size;
      }
    } else if (std::regex_match(line, m, gate_re)) {
      auto kind = kinds.find(m[1]);
      if (kind == kinds.end()) throw fail("unsupported gate " + m[1].str());
      std::vector<int> qs;
      std::string args = m[2];
      std::size_t start = 0;
      while (start <= args.size()) {
        std::size_t comma = args.find(',', start);
        if (comma == std::string::npos) comma = args.size();
        std::string arg = args.substr(start, comma - start);
        std::smatch am;
        if (!std::regex_match(arg, am, arg_re)) throw fail("bad operand " + arg);
        auto reg = offset.find(am[1]);
        if (reg == offset.end()) throw fail("unknown register " + am[1].str());
        int idx = std::stoi(am[2]);
        if (idx >= reg_size[am[1]]) throw fail("index out of range " + arg);
        qs.push_back(reg->second + idx);
        start = comma + 1;
      }
      if (qs.size() != kind->second.second) throw fail("wrong operand count");
      int target = qs.back();
      qs.pop_back();
      c.gates.push_back(Gate{kind->second.first, qs,
                             std::vector<bool>(qs.size(), true), target});
    } else {
      throw fail("cannot parse \"" + line + "\"");
    }
  }
  if (!saw_header) throw ParseError("qasm: missing OPENQASM 2.0 header");
  c.validate();
  return c;
}

}  // namespace quantakit
