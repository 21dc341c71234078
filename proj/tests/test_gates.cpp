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

#include "quantakit/errors.hpp"
#include "quantakit/gates.hpp"

namespace quantakit {
namespace {

const double kS = 1 / std::sqrt(2.0);

Label pr(int a, int b) { return Label::pair(Label::bit(a), Label::bit(b)); }

TEST(Gates, HadamardAmplitudes) {
  AmpVec v = had()(Label::bit(true));
  EXPECT_NEAR(v.at(Label::bit(false)).real(), kS, 1e-15);
  EXPECT_NEAR(v.at(Label::bit(true)).real(), -kS, 1e-15);
}

TEST(Gates, TPhase) {
  AmpVec v = tgate()(Label::bit(true));
  EXPECT_NEAR(std::abs(v.at(Label::bit(true)) - Amp(kS, kS)), 0, 1e-15);
}

TEST(Gates, BellStates) {
  // B(a,b) = (|0,b> + (-1)^a |1,¬b>) / √2.
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      AmpVec v = bell()(pr(a, b));
      EXPECT_EQ(v.size(), 2u);
      EXPECT_NEAR(v.at(pr(0, b)).real(), kS, 1e-15);
      EXPECT_NEAR(v.at(pr(1, 1 - b)).real(), a ? -kS : kS, 1e-15);
    }
  }
}

TEST(Gates, CnotIsUOfIdentity) {
  CMatrix m = materialize(cnot());
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  want(0, 0) = want(1, 1) = want(3, 2) = want(2, 3) = 1;
  EXPECT_TRUE(m.m.isApprox(want, 0));
}

TEST(Gates, CcnotSwapsLastTwo) {
  CMatrix m = materialize(ccnot());
  for (Eigen::Index j = 0; j < 8; ++j) {
    Eigen::Index i = j < 6 ? j : 13 - j;
    EXPECT_EQ(m.m(i, j), Amp(1));
  }
}

TEST(Gates, ChoiceFiresFirstOnZero) {
  KleisliOp c = choice(ret_op(FinBasis::bits()), x_gate());
  EXPECT_EQ(c(pr(0, 1)).at(pr(0, 1)), Amp(1));
  EXPECT_EQ(c(pr(1, 1)).at(pr(1, 0)), Amp(1));
}

TEST(Gates, CondMatrixEntries) {
  // H on the control, then H on the target when the control reads 0 and X
  // when it reads 1. Hand-expanded columns (0,0) and (1,1).
  CMatrix m = materialize(cond());
  auto at = [&](Label r, Label c) {
    return m.m(static_cast<Eigen::Index>(m.tgt.index_of(r)),
               static_cast<Eigen::Index>(m.src.index_of(c)));
  };
  EXPECT_NEAR(at(pr(0, 0), pr(0, 0)).real(), 0.5, 1e-15);
  EXPECT_NEAR(at(pr(1, 1), pr(0, 0)).real(), kS, 1e-15);
  EXPECT_NEAR(at(pr(1, 0), pr(0, 0)).real(), 0.0, 1e-15);
  EXPECT_NEAR(at(pr(1, 0), pr(1, 1)).real(), -kS, 1e-15);
  EXPECT_TRUE(is_unitary(m));
}

TEST(Gates, AliceShape) {
  KleisliOp a = alice();
  EXPECT_EQ(a.src().size(), 8u);
  EXPECT_EQ(a.src()[1].str(), "(0,(0,1))");
  EXPECT_EQ(a.tgt()[1].str(), "((0,0),1)");
}

TEST(Library, Registry) {
  const GateLibrary& lib = GateLibrary::standard();
  for (const char* n :
       {"x", "h", "t", "cnot", "ccnot", "bell", "unbell", "alice", "cond", "id"}) {
    EXPECT_NO_THROW(lib.get(n)) << n;
  }
  EXPECT_THROW(lib.get("nope"), UnknownLabel);
}

TEST(Library, RejectsNonUnitary) {
  GateLibrary lib;
  KleisliOp zero(FinBasis::bits(), FinBasis::bits(),
                 [](const Label&) { return AmpVec(); });
  EXPECT_THROW(lib.add("zero", zero), NotUnitary);
}

}  // namespace
}  // namespace quantakit
