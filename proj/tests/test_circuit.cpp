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


#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "quantakit/circuit.hpp"
#include "quantakit/errors.hpp"
#include "quantakit/gates.hpp"
#include "quantakit/quanta.hpp"

namespace quantakit {
namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(QK_GOLDEN) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Circuit circuit(int data, int anc, std::vector<Gate> gates) {
  Circuit c;
  c.data_qubits = data;
  c.ancilla_qubits = anc;
  c.gates = std::move(gates);
  return c;
}

TEST(Encoding, Pinned16MatchesTheTable) {
  Encoding e = Encoding::pinned16();
  EXPECT_EQ(e.width(), 4);
  EXPECT_EQ(e.encode(Label::parse("([1,0],1)")), "0111");
  EXPECT_EQ(e.decode("1110"), Label::parse("([0,0,0],0)"));
  EXPECT_EQ(e.index_of_bits("1001"), 9u);
  EXPECT_THROW(e.decode("011"), std::invalid_argument);
}

TEST(Encoding, NaturalNeedsPowerOfTwo) {
  EXPECT_NO_THROW(Encoding::natural(list_basis(0)));
  EXPECT_THROW(Encoding::natural(list_basis(2)), BasisMismatch);
}

TEST(Simulate, ClassicalGates) {
  Circuit c = circuit(3, 0, {Gate::x(0), Gate::cx(0, 1), Gate::ccx(0, 1, 2)});
  EXPECT_EQ(simulate(c, "000"), "111");
  EXPECT_EQ(simulate(c, "100"), "000");
  // Qubit 0 is the leftmost character.
  EXPECT_EQ(simulate(circuit(2, 0, {Gate::x(0)}), "00"), "10");
}

TEST(Simulate, NegativeControls) {
  Circuit c = circuit(3, 0, {Gate::mcx({0, 1}, {false, true}, 2)});
  EXPECT_EQ(simulate(c, "010"), "011");
  EXPECT_EQ(simulate(c, "110"), "110");
}

TEST(Simulate, DirtyAncillaIsReported) {
  Circuit c = circuit(1, 1, {Gate::cx(0, 1)});
  EXPECT_EQ(simulate(c, "0"), "0");
  EXPECT_THROW(simulate(c, "1"), DirtyAncilla);
}

TEST(Simulate, StatevectorInterference) {
  // H H = id, and H alone gives a uniform split.
  Circuit hh = circuit(1, 0, {Gate::h(0), Gate::h(0)});
  EXPECT_EQ(simulate(hh, "1"), "1");
  AmpVec v = simulate_state(circuit(1, 0, {Gate::h(0)}),
                            AmpVec::ret(Label::bit(true)));
  EXPECT_NEAR(v.at(Label::bit(true)).real(), -1 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(simulate(circuit(1, 0, {Gate::h(0)}), "0"), std::domain_error);
}

TEST(Mcx, NeedsAncillas) {
  EXPECT_THROW(decompose_mcx({0, 1, 2, 3}, {true, true, true, true}, 4, {5}),
               InsufficientAncillas);
  auto g = decompose_mcx({0, 1}, {true, true}, 2, {});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], Gate::ccx(0, 1, 2));
}

TEST(Peephole, CancelsNestedPairs) {
  auto out = peephole({Gate::cx(0, 1), Gate::x(2), Gate::x(2), Gate::cx(0, 1),
                       Gate::x(0)});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], Gate::x(0));
  // T is not self-inverse.
  EXPECT_EQ(peephole({Gate::t(0), Gate::t(0)}).size(), 2u);
}

TEST(Synth, RejectsNonPermutations) {
  CMatrix h = materialize(had());
  EXPECT_THROW(permutation_of(h), OutOfScope);
  EXPECT_THROW(synth_permutation(h, Encoding::natural(h.src)), OutOfScope);
}

TEST(Synth, SingleSwapNeedsOneGate) {
  // Swapping "10" and "11" is X on qubit 1 controlled by qubit 0.
  FinBasis b = FinBasis::product(FinBasis::bits(), FinBasis::bits());
  CMatrix m = materialize(cnot());
  Circuit c = synth_permutation(m, Encoding::natural(b));
  EXPECT_EQ(export_qasm(c), golden("single_cx.qasm"));
}

TEST(Synth, PinnedCnotMetricsAreFrozen) {
  Encoding enc = Encoding::pinned16();
  CMatrix m = materialize(quantamorphism(StepOp(cnot()), enc.basis()));
  Circuit c = synth_permutation(m, enc);
  EXPECT_EQ(export_qasm(c), golden("cnot_pinned16.qasm"));
  EXPECT_EQ(metrics_json(metrics(c)) + "\n", golden("cnot_pinned16_metrics.json"));
}

TEST(Qasm, RoundTripAndErrors) {
  Circuit c = circuit(3, 1, {Gate::x(0), Gate::ccx(0, 1, 3), Gate::h(2),
                             Gate::t(2), Gate::tdg(2), Gate::cx(3, 2)});
  EXPECT_EQ(parse_qasm(export_qasm(c)), c);
  EXPECT_THROW(parse_qasm("qreg q[1];\nx q[0];\n"), ParseError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nrz(0.1) q[0];\n"),
               ParseError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[1];\nx q[1];\n"), ParseError);
}

TEST(CliffordT, ToffoliNetwork) {
  Circuit c = expand_toffoli(circuit(3, 0, {Gate::ccx(0, 1, 2)}));
  EXPECT_EQ(c.gates.size(), 15u);
  for (int x = 0; x < 8; ++x) {
    std::string in = {char('0' + (x >> 2)), char('0' + ((x >> 1) & 1)),
                      char('0' + (x & 1))};
    std::string want = in;
    if (in[0] == '1' && in[1] == '1') want[2] = in[2] == '1' ? '0' : '1';
    EXPECT_EQ(simulate(c, in), want);
  }
  Metrics m = metrics(c);
  EXPECT_EQ(m.cx, 6u);
}

TEST(Metrics, SizeCxDepth) {
  Metrics m = metrics(circuit(3, 0, {Gate::x(0), Gate::cx(0, 1), Gate::x(2),
                                     Gate::ccx(0, 1, 2)}));
  EXPECT_EQ(m.size, 4u);
  EXPECT_EQ(m.cx, 1u);
  EXPECT_EQ(m.depth, 3u);
  EXPECT_EQ(metrics_json(m), "{\"size\":4,\"cx\":1,\"depth\":3}");
}

}  // namespace
}  // namespace quantakit
