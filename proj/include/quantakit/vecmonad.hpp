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

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "quantakit/label.hpp"

namespace quantakit {

using Amp = std::complex<double>;

inline constexpr double kPruneEps = 1e-12;
inline constexpr double kDefaultTol = 1e-9;

/// A ket with finite support. Entries below kPruneEps are dropped on prune().
class AmpVec {
 public:
  AmpVec() = default;

  static AmpVec ret(const Label& x);

  /// Adds `a` to the amplitude at `x`. Throws on a non-finite amplitude.
  void accumulate(const Label& x, Amp a);
  AmpVec& prune(double eps = kPruneEps);

  Amp at(const Label& x) const;
  const std::map<Label, Amp>& support() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<Label, Amp> entries_;
};

AmpVec scale(Amp k, const AmpVec& v);
AmpVec add(const AmpVec& u, const AmpVec& v);
double norm(const AmpVec& v);
/// Sup-norm of the difference is at most tol.
bool vec_equal(const AmpVec& u, const AmpVec& v, double tol = kDefaultTol);

/**
 * A Kleisli arrow src -> Vec tgt. The function must be pure; it may be called
 * from several threads at once.
 */
class KleisliOp {
 public:
  using Fn = std::function<AmpVec(const Label&)>;

  KleisliOp(FinBasis src, FinBasis tgt, Fn fn);

  const FinBasis& src() const { return src_; }
  const FinBasis& tgt() const { return tgt_; }

  /// Throws UnknownLabel for inputs outside src or outputs outside tgt.
  AmpVec operator()(const Label& x) const;

 private:
  FinBasis src_;
  FinBasis tgt_;
  Fn fn_;
};

/// A typed complex matrix, |tgt| rows by |src| columns.
struct CMatrix {
  FinBasis src;
  FinBasis tgt;
  Eigen::MatrixXcd m;
};

KleisliOp ret_op(const FinBasis& a);
AmpVec bind(const AmpVec& v, const KleisliOp& f);
/// g . f
KleisliOp kleisli(const KleisliOp& g, const KleisliOp& f);
/// (f ⊗ g)(a,b) = do { x <- f a; y <- g b; ret (x,y) }
KleisliOp tensor(const KleisliOp& f, const KleisliOp& g);
/// f ⊕ g on the coproduct bases.
KleisliOp direct_sum(const KleisliOp& f, const KleisliOp& g);
KleisliOp from_matrix(const CMatrix& m);

/// Column j is f(src[j]); columns are computed in parallel.
CMatrix materialize(const KleisliOp& f);
CMatrix materialize(const KleisliOp& f, const FinBasis& tgt);

CMatrix dagger(const CMatrix& m);
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix kronecker(const CMatrix& a, const CMatrix& b);
/// Throws BasisMismatch when m is not square.
bool is_unitary(const CMatrix& m, double tol = kDefaultTol);
/// Same bases and entrywise within tol.
bool matrix_close(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
/// Entrywise equality of the materializations.
bool op_equal(const KleisliOp& f, const KleisliOp& g, double tol = kDefaultTol);

}  // namespace quantakit
