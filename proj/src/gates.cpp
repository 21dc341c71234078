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

#include "quantakit/gates.hpp"

#include <cmath>
#include <numbers>

#include "quantakit/errors.hpp"

namespace quantakit {

namespace {

const FinBasis& bb() {
  static const FinBasis b = FinBasis::product(FinBasis::bits(),
                                              FinBasis::bits());
  return b;
}

Label bit(bool b) { return Label::bit(b); }

AmpVec had_vec(bool b) {
  const double h = 1.0 / std::numbers::sqrt2;
  AmpVec v;
  v.accumulate(bit(false), h);
  v.accumulate(bit(true), b ? -h : h);
  return v;
}

}  // namespace

KleisliOp lift(const Rel& f) {
  if (!is_function(f)) {
    throw std::invalid_argument("lift needs a total function");
  }
  return KleisliOp(f.src(), f.tgt(),
                   [f](const Label& a) { return AmpVec::ret(f.apply(a)); });
}

KleisliOp lift(const FinBasis& src, const FinBasis& tgt,
               const std::function<Label(const Label&)>& f) {
  return lift(Rel::from_function(src, tgt, f));
}

Rel not_rel() {
  return Rel::from_function(FinBasis::bits(), FinBasis::bits(),
                            [](const Label& a) { return bit(!a.as_bit()); });
}

Rel xor_rel() {
  return Rel::from_function(bb(), FinBasis::bits(), [](const Label& p) {
    return bit(p.first().as_bit() != p.second().as_bit());
  });
}

Rel and_rel() {
  return Rel::from_function(bb(), FinBasis::bits(), [](const Label& p) {
    return bit(p.first().as_bit() && p.second().as_bit());
  });
}

Rel cnot_rel() { return pair(fst(FinBasis::bits(), FinBasis::bits()), xor_rel()); }

Rel ccnot_rel() { return u_construct(and_rel(), MonoidSpec::xor_bits()); }

KleisliOp x_gate() { return lift(not_rel()); }

KleisliOp had() {
  return KleisliOp(FinBasis::bits(), FinBasis::bits(),
                   [](const Label& a) { return had_vec(a.as_bit()); });
}

KleisliOp tgate() {
  return KleisliOp(FinBasis::bits(), FinBasis::bits(), [](const Label& a) {
    AmpVec v;
    v.accumulate(a, a.as_bit() ? std::polar(1.0, std::numbers::pi / 4) : 1.0);
    return v;
  });
}

KleisliOp cnot() { return lift(cnot_rel()); }
KleisliOp ccnot() { return lift(ccnot_rel()); }

KleisliOp bell() {
  Rel c = cnot_rel();
  return KleisliOp(bb(), bb(), [c](const Label& ab) {
    AmpVec out;
    for (const auto& [x, amp] : had_vec(ab.first().as_bit())) {
      out.accumulate(c.apply(Label::pair(x, ab.second())), amp);
    }
    return out.prune();
  });
}

KleisliOp unbell() {
  Rel c = cnot_rel();
  return KleisliOp(bb(), bb(), [c](const Label& ca) {
    Label a2 = c.apply(ca).second();
    AmpVec out;
    for (const auto& [b, amp] : had_vec(ca.first().as_bit())) {
      out.accumulate(Label::pair(b, a2), amp);
    }
    return out.prune();
  });
}

KleisliOp alice() {
  const FinBasis& b = FinBasis::bits();
  KleisliOp bl = bell();
  KleisliOp ub = unbell();
  return KleisliOp(FinBasis::product(b, bb()), FinBasis::product(bb(), b),
                   [bl, ub](const Label& in) {
                     const Label& c = in.first();
                     AmpVec out;
                     for (const auto& [ab, x] : bl(in.second())) {
                       for (const auto& [ca, y] :
                            ub(Label::pair(c, ab.first()))) {
                         out.accumulate(Label::pair(ca, ab.second()), x * y);
                       }
                     }
                     return out.prune();
                   });
}

KleisliOp choice(const KleisliOp& f, const KleisliOp& g) {
  if (!(f.src() == g.src()) || !(f.tgt() == g.tgt()) ||
      !(f.src() == f.tgt())) {
    throw BasisMismatch("choice: branches must share one basis");
  }
  const FinBasis& a = f.src();
  // <fst, γ°> : B x A -> B x (A + A)
  Rel split = pair(fst(FinBasis::bits(), a), converse(gamma(a)));
  // [f|g] : A + A -> A
  KleisliOp junc(FinBasis::coproduct(a, a), a, [f, g](const Label& x) {
    return x.kind() == Label::Kind::left ? f(x.inner()) : g(x.inner());
  });
  return kleisli(tensor(ret_op(FinBasis::bits()), junc), lift(split));
}

KleisliOp mccarthy(const KleisliOp& p, const KleisliOp& f,
                   const KleisliOp& g) {
  if (!(p.src() == FinBasis::bits()) || !(p.tgt() == FinBasis::bits())) {
    throw BasisMismatch("mccarthy: predicate must act on one bit");
  }
  return kleisli(choice(g, f), tensor(p, ret_op(f.src())));
}

KleisliOp cond() {
  return KleisliOp(bb(), bb(), [](const Label& qp) {
    bool p = qp.second().as_bit();
    AmpVec out;
    for (const auto& [q2, a] : had_vec(qp.first().as_bit())) {
      AmpVec branch = q2.as_bit() ? AmpVec::ret(bit(!p)) : had_vec(p);
      for (const auto& [p2, b] : branch) {
        out.accumulate(Label::pair(q2, p2), a * b);
      }
    }
    return out.prune();
  });
}

const GateLibrary& GateLibrary::standard() {
  static const GateLibrary lib = [] {
    GateLibrary l;
    l.add("x", x_gate());
    l.add("h", had());
    l.add("t", tgate());
    l.add("cnot", cnot());
    l.add("ccnot", ccnot());
    l.add("bell", bell());
    l.add("unbell", unbell());
    l.add("alice", alice());
    l.add("cond", cond());
    l.add("id", ret_op(bb()));
    return l;
  }();
  return lib;
}

void GateLibrary::add(const std::string& name, KleisliOp op, double tol) {
  CMatrix m = materialize(op);
  if (m.m.rows() != m.m.cols() || !is_unitary(m, tol)) {
    throw NotUnitary("gate " + name + " is not unitary");
  }
  ops_.insert_or_assign(name, std::move(op));
}

const KleisliOp& GateLibrary::get(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw UnknownLabel("unknown gate: " + name);
  return it->second;
}

bool GateLibrary::contains(const std::string& name) const {
  return ops_.count(name) != 0;
}

std::vector<std::string> GateLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& kv : ops_) out.push_back(kv.first);
  return out;
}

}  // namespace quantakit
