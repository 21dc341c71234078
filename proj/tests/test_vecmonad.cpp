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
#include <limits>

#include "quantakit/errors.hpp"
#include "quantakit/vecmonad.hpp"

namespace quantakit {
namespace {

FinBasis atoms(std::size_t n, const std::string& p) {
  std::vector<Label> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back(Label::atom(p + std::to_string(i)));
  return FinBasis(ls);
}

CMatrix mat(const FinBasis& s, const FinBasis& t,
            std::initializer_list<std::initializer_list<Amp>> rows) {
  CMatrix m{s, t, Eigen::MatrixXcd(t.size(), s.size())};
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (Amp a : r) m.m(i, j++) = a;
    ++i;
  }
  return m;
}

TEST(AmpVec, AccumulatesAndPrunes) {
  AmpVec v;
  Label a = Label::atom("a");
  v.accumulate(a, 0.5);
  v.accumulate(a, -0.5);
  EXPECT_EQ(v.size(), 1u);
  v.prune();
  EXPECT_TRUE(v.empty());
  EXPECT_THROW(v.accumulate(a, std::numeric_limits<double>::quiet_NaN()),
               std::invalid_argument);
}

TEST(AmpVec, NormAndEquality) {
  AmpVec v;
  v.accumulate(Label::atom("a"), Amp(0.6, 0));
  v.accumulate(Label::atom("b"), Amp(0, 0.8));
  EXPECT_NEAR(norm(v), 1.0, 1e-15);
  AmpVec w = add(v, scale(1e-10, v));
  EXPECT_TRUE(vec_equal(v, w));
  EXPECT_FALSE(vec_equal(v, w, 1e-12));
}

TEST(Kleisli, BindIsMatrixVectorProduct) {
  FinBasis a = atoms(2, "a"), b = atoms(3, "b");
  CMatrix m = mat(a, b, {{1, 2}, {Amp(0, 1), 0}, {-1, 3}});
  KleisliOp f = from_matrix(m);
  AmpVec v;
  v.accumulate(a[0], 2.0);
  v.accumulate(a[1], Amp(0, 1));
  AmpVec w = bind(v, f);
  // Hand-computed m * (2, i).
  EXPECT_NEAR(std::abs(w.at(b[0]) - Amp(2, 2)), 0, 1e-15);
  EXPECT_NEAR(std::abs(w.at(b[1]) - Amp(0, 2)), 0, 1e-15);
  EXPECT_NEAR(std::abs(w.at(b[2]) - Amp(-2, 3)), 0, 1e-15);
}

TEST(Kleisli, ChecksMembership) {
  FinBasis a = atoms(2, "a");
  KleisliOp f = ret_op(a);
  EXPECT_THROW(f(Label::atom("zz")), UnknownLabel);
  KleisliOp leak(a, a, [](const Label&) { return AmpVec::ret(Label::atom("x")); });
  EXPECT_THROW(leak(a[0]), UnknownLabel);
}

TEST(Kleisli, ComposeRejectsMismatch) {
  EXPECT_THROW(kleisli(ret_op(atoms(2, "a")), ret_op(atoms(2, "b"))),
               BasisMismatch);
}

TEST(Matrix, KroneckerLayout) {
  FinBasis a = atoms(2, "a"), b = atoms(2, "b");
  CMatrix x = mat(a, a, {{0, 1}, {1, 0}});
  CMatrix z = mat(b, b, {{1, 0}, {0, -1}});
  CMatrix k = kronecker(x, z);
  // X ⊗ Z, left factor outer.
  EXPECT_EQ(k.m(0, 2), Amp(1));
  EXPECT_EQ(k.m(1, 3), Amp(-1));
  EXPECT_EQ(k.m(0, 0), Amp(0));
  EXPECT_EQ(k.src[1].str(), "(a0,b1)");
  EXPECT_TRUE(matrix_close(materialize(tensor(from_matrix(x), from_matrix(z))), k, 0));
}

TEST(Matrix, DirectSumIsBlockDiagonal) {
  FinBasis a = atoms(1, "a"), b = atoms(2, "b");
  CMatrix m = materialize(direct_sum(from_matrix(mat(a, a, {{2}})),
                                     from_matrix(mat(b, b, {{0, 1}, {1, 0}}))));
  ASSERT_EQ(m.m.rows(), 3);
  EXPECT_EQ(m.m(0, 0), Amp(2));
  EXPECT_EQ(m.m(1, 2), Amp(1));
  EXPECT_EQ(m.m(0, 1), Amp(0));
  EXPECT_EQ(m.src[0].str(), "i1(a0)");
}

TEST(Matrix, Unitarity) {
  FinBasis a = atoms(2, "a");
  const double s = 1 / std::sqrt(2.0);
  EXPECT_TRUE(is_unitary(mat(a, a, {{s, s}, {s, -s}})));
  EXPECT_FALSE(is_unitary(mat(a, a, {{1, 1}, {0, 1}})));
  EXPECT_THROW(is_unitary(mat(a, atoms(3, "b"), {{1, 0}, {0, 1}, {0, 0}})),
               BasisMismatch);
  CMatrix d = dagger(mat(a, a, {{Amp(0, 1), 2}, {0, 1}}));
  EXPECT_EQ(d.m(1, 0), Amp(2));
  EXPECT_EQ(d.m(0, 0), Amp(0, -1));
}

}  // namespace
}  // namespace quantakit
