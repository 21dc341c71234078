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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quantakit/vecmonad.hpp"

namespace quantakit {

/// A bijection between a basis of 2^k labels and k-bit strings. Bit 0 of a
/// string is qubit 0 and is printed leftmost.
class Encoding {
 public:
  /// Label i gets the k-bit binary expansion of i, most significant first.
  /// Throws BasisMismatch unless the size is a power of two.
  static Encoding natural(const FinBasis& basis);
  /// 0000 -> ([],0), 0001 -> ([],1), ..., 1111 -> ([0,0,0],1).
  static Encoding pinned16();

  const FinBasis& basis() const { return basis_; }
  int width() const { return width_; }
  std::string encode(const Label& l) const;
  Label decode(std::string_view bits) const;
  std::string bits_of(std::size_t index) const;
  std::size_t index_of_bits(std::string_view bits) const;

 private:
  Encoding(FinBasis basis, int width);
  FinBasis basis_;
  int width_;
};

enum class GateKind { X, CX, CCX, H, T, Tdg, MCX };

/// One gate. Qubits 0..k-1 are data, k.. are ancillas. For MCX, polarity[i]
/// says whether control i fires on 1 (true) or on 0.
struct Gate {
  GateKind kind;
  std::vector<int> controls;
  std::vector<bool> polarity;
  int target;

  static Gate x(int t) { return {GateKind::X, {}, {}, t}; }
  static Gate cx(int c, int t) { return {GateKind::CX, {c}, {true}, t}; }
  static Gate ccx(int c1, int c2, int t) {
    return {GateKind::CCX, {c1, c2}, {true, true}, t};
  }
  static Gate h(int t) { return {GateKind::H, {}, {}, t}; }
  static Gate t(int q) { return {GateKind::T, {}, {}, q}; }
  static Gate tdg(int q) { return {GateKind::Tdg, {}, {}, q}; }
  static Gate mcx(std::vector<int> controls, std::vector<bool> polarity,
                  int t) {
    return {GateKind::MCX, std::move(controls), std::move(polarity), t};
  }

  bool self_inverse() const {
    return kind != GateKind::T && kind != GateKind::Tdg;
  }
  std::string str() const;
  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  int data_qubits = 0;
  int ancilla_qubits = 0;
  std::vector<Gate> gates;

  int total_qubits() const { return data_qubits + ancilla_qubits; }
  /// Throws std::invalid_argument on out-of-range or repeated qubits.
  void validate() const;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Metrics {
  std::size_t size = 0;
  std::size_t cx = 0;
  std::size_t depth = 0;
};

/// Row index of the single 1 in every column; throws OutOfScope unless m is
/// a 0/1 permutation matrix within tol.
std::vector<std::size_t> permutation_of(const CMatrix& m,
                                        double tol = kDefaultTol);

/// Transpositions, each as a Gray-code chain of MCX gates, lowered to
/// X/CX/CCX with ancillas and cleaned by the peephole pass.
Circuit synth_permutation(const CMatrix& m, const Encoding& enc);

/// X/CX/CCX realization of an MCX using clean ancillas, restored on exit.
/// Throws InsufficientAncillas when fewer than controls - 2 are given.
std::vector<Gate> decompose_mcx(const std::vector<int>& controls,
                                const std::vector<bool>& polarity, int target,
                                const std::vector<int>& ancillas);

/// Cancels pairs of identical self-inverse gates separated only by gates on
/// other qubits, until nothing changes.
std::vector<Gate> peephole(const std::vector<Gate>& gates);

/// Classical path for X/CX/CCX/MCX circuits, statevector otherwise.
/// Ancillas start at 0; DirtyAncilla if any ends elsewhere.
std::string simulate(const Circuit& c, std::string_view input);
/// v is over k-bit string labels.
AmpVec simulate_state(const Circuit& c, const AmpVec& v);

/// Each CCX becomes the 15-gate H/T/Tdg/CX network.
Circuit expand_toffoli(const Circuit& c);

std::string export_qasm(const Circuit& c);
Circuit parse_qasm(std::string_view text);

Metrics metrics(const Circuit& c);
std::string metrics_json(const Metrics& m);

}  // namespace quantakit
