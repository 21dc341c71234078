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
#include <utility>
#include <vector>

#include "quantakit/relalg.hpp"
#include "quantakit/vecmonad.hpp"

namespace quantakit {

/// Lists over `items` of length at most maxlen, in cons-tree preorder: a
/// list t, then the subtree rooted at x:t for each item x in basis order.
FinBasis list_only_basis(std::size_t maxlen,
                         const FinBasis& items = FinBasis::bits());

/// (list, payload) pairs with the payload varying fastest. For maxlen 2 over
/// bits this is ([],0) ([],1) ([0],0) ([0],1) ([0,0],0) ([0,0],1) ([1,0],0)
/// ([1,0],1) ([1],0) ([1],1) ([0,1],0) ([0,1],1) ([1,1],0) ([1,1],1).
FinBasis list_basis(std::size_t maxlen,
                    const FinBasis& items = FinBasis::bits(),
                    const FinBasis& payload = FinBasis::bits());

/// The 16-state basis of the three-control-qubit circuit: the 14 maxlen-2
/// labels followed by ([0,0,0],0) and ([0,0,0],1).
FinBasis pinned16_basis();

/// Splits a row-major product basis into its factors; throws BasisMismatch
/// if the basis is not a full product of pairs.
std::pair<FinBasis, FinBasis> split_product(const FinBasis& ab);

/// A step A x B -> C x B with a unitary materialization.
class StepOp {
 public:
  /// Throws NotUnitary when the step is not unitary within tol.
  explicit StepOp(KleisliOp op, double tol = kDefaultTol);

  const KleisliOp& op() const { return op_; }
  const FinBasis& items_in() const { return items_in_; }
  const FinBasis& items_out() const { return items_out_; }
  const FinBasis& payload() const { return payload_; }

 private:
  KleisliOp op_;
  FinBasis items_in_;
  FinBasis items_out_;
  FinBasis payload_;
};

/// The monadic fold of an arbitrary (not necessarily unitary) step
/// q : A x B -> C x B, on list_basis(maxlen, A, B):
///   ⦇q⦈ ([],b)  = ret ([],b)
///   ⦇q⦈ (h:t,b) = do { (t',b') <- ⦇q⦈ (t,b); (h'',b'') <- q (h,b');
///                      ret (h'':t', b'') }
KleisliOp fold_op(const KleisliOp& q, std::size_t maxlen);

/// The quantamorphism of a unitary step over list_basis(maxlen).
KleisliOp quantamorphism(const StepOp& f, std::size_t maxlen);
/// The quantamorphism on an explicit basis of (list, payload) labels, which
/// must be closed under the fold. Requires C == A.
KleisliOp quantamorphism(const StepOp& f, const FinBasis& basis);

/// ⦇f⦈ applied to one (list, payload) label of any length.
AmpVec run_quanta(const StepOp& f, const Label& input);

/// rfold f (a:x,b) = (a:y, f (a,b')) where (y,b') = rfold f (x,b), for
/// f : A x B -> B. Throws NotComplemented naming two colliding inputs unless
/// <fst,f> is injective.
Label rfold(const Rel& f, const Label& input);
/// rfold as a relation on list_basis(maxlen, A, B).
Rel rfold_rel(const Rel& f, std::size_t maxlen);

/// The classical accumulating map ⦇g⦈ for g : A x B -> C x B:
/// ⦇g⦈ (a:x,b) = (c:y,b'') where (y,b') = ⦇g⦈ (x,b); (c,b'') = g (a,b').
Label classical_fold(const Rel& g, const Label& input);
Rel classical_fold_rel(const Rel& g, std::size_t maxlen);

/// The source B + A x (A*_{n-1} x B) of α at truncation n. For n = 0 the
/// right summand is empty.
FinBasis alpha_domain(std::size_t maxlen, const FinBasis& items,
                      const FinBasis& payload);
/// α = [<nil,id> | (cons x id) . a] onto list_basis(maxlen, A, B).
Rel alpha_rel(std::size_t maxlen, const FinBasis& items = FinBasis::bits(),
              const FinBasis& payload = FinBasis::bits());
Rel alpha_inv_rel(std::size_t maxlen,
                  const FinBasis& items = FinBasis::bits(),
                  const FinBasis& payload = FinBasis::bits());

/// a = <id x fst, snd . snd> : A x (B x C) -> (A x B) x C
Rel assoc_rel(const FinBasis& a, const FinBasis& b, const FinBasis& c);
/// xl : A x (B x C) -> B x (A x C)
Rel xl_rel(const FinBasis& a, const FinBasis& b, const FinBasis& c);
/// map k x id : list_basis(maxlen, A, B) -> list_basis(maxlen, C, B)
Rel map_rel(const Rel& k, std::size_t maxlen, const FinBasis& payload);

/// Ψ x = α . (id + xl . (id x x) . xl) for x : A x B -> C x B, typed
/// B + A x (C*_{n-1} x B) -> C*_n x B.
Rel psi_rel(const Rel& x, std::size_t maxlen);
/// The same with ⊕ and ⊗ in the Kleisli category.
KleisliOp psi(const KleisliOp& x, std::size_t maxlen);

/// The quantamorphism unfolded as Ψ Q . (id ⊕ id ⊗ ⦇Q⦈) . α°.
KleisliOp quantamorphism_via_psi(const KleisliOp& q, std::size_t maxlen);

/// The relational catamorphism k = ⦇h⦈ on list_basis(maxlen, A, B) for
/// h : B + A x C -> C, defined by k . α = h . (id + id x k). Targets of h
/// outside C are never reached if h is partial there.
Rel rel_cata(const Rel& h, std::size_t maxlen, const FinBasis& items,
             const FinBasis& payload);

/// in = [nil|cons] : B + A x A*_maxlen -> A*_maxlen; cons overflowing the
/// truncation is left undefined.
Rel in_rel(std::size_t maxlen, const FinBasis& items, const FinBasis& payload);

}  // namespace quantakit
