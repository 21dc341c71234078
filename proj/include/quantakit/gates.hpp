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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quantakit/relalg.hpp"
#include "quantakit/vecmonad.hpp"

namespace quantakit {

/// ret . f for a classical function given as a relation.
KleisliOp lift(const Rel& f);
KleisliOp lift(const FinBasis& src, const FinBasis& tgt,
               const std::function<Label(const Label&)>& f);

/// Classical building blocks on bits.
Rel not_rel();
/// xor : B x B -> B
Rel xor_rel();
/// and : B x B -> B
Rel and_rel();
/// <fst, xor> on B x B; the first component controls.
Rel cnot_rel();
/// U(and) on (B x B) x B.
Rel ccnot_rel();

KleisliOp x_gate();
KleisliOp had();
/// diag(1, e^{iπ/4})
KleisliOp tgate();
KleisliOp cnot();
KleisliOp ccnot();
/// bell (a,b) = do { x <- had a; ret (cnot (x,b)) }
KleisliOp bell();
/// unbell (c,a) = let (_,a') = cnot (c,a) in do { b <- had c; ret (b,a') }
KleisliOp unbell();
/// (unbell ⊗ id) . a . (id ⊗ bell) : B x (B x B) -> (B x B) x B
KleisliOp alice();

/// f ⋄ g = (id ⊗ [f|g]) . <fst, γ°> on B x A, with f, g : A -> A. As in the
/// coproduct route, f acts where the control is 0 and g where it is 1.
KleisliOp choice(const KleisliOp& f, const KleisliOp& g);
/// The conditional "if p then f else g" under quantum control:
/// (g ⋄ f) . (p ⊗ id).
KleisliOp mccarthy(const KleisliOp& p, const KleisliOp& f,
                   const KleisliOp& g);
/// cond (q,p) = do { q' <- had q; p' <- if q' then ret (¬p) else had p;
///                   ret (q',p') }
KleisliOp cond();

/// Named gates, each checked for unitarity when added.
class GateLibrary {
 public:
  /// x, h, t, cnot, ccnot, bell, unbell, alice, cond and id.
  static const GateLibrary& standard();

  /// Throws NotUnitary if the materialization is not unitary within tol.
  void add(const std::string& name, KleisliOp op, double tol = kDefaultTol);
  /// Throws UnknownLabel for an unregistered name.
  const KleisliOp& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, KleisliOp> ops_;
};

}  // namespace quantakit
