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

#include "quantakit/quanta.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "quantakit/errors.hpp"
#include "quantakit/gates.hpp"

namespace quantakit {

namespace {

void emit_lists(std::vector<Label>& xs, std::size_t maxlen,
                const FinBasis& items, std::vector<Label>& out) {
  out.push_back(Label::list(xs));
  if (xs.size() == maxlen) return;
  for (const Label& x : items) {
    xs.insert(xs.begin(), x);
    emit_lists(xs, maxlen, items, out);
    xs.erase(xs.begin());
  }
}

Label cons(const Label& h, const Label& t) {
  std::vector<Label> items;
  items.reserve(t.items().size() + 1);
  items.push_back(h);
  items.insert(items.end(), t.items().begin(), t.items().end());
  return Label::list(std::move(items));
}

Label tail(const Label& xs) {
  return Label::list({xs.items().begin() + 1, xs.items().end()});
}

bool is_list_state(const Label& l) {
  return l.kind() == Label::Kind::pair &&
         l.first().kind() == Label::Kind::list;
}

// Shared state of one fold: the step and a memo of sub-fold results keyed
// by (tail, payload). Results do not depend on which thread fills the memo.
class FoldCore {
 public:
  explicit FoldCore(KleisliOp q) : q_(std::move(q)) {}

  AmpVec apply(const Label& in) {
    if (!is_list_state(in)) {
      throw UnknownLabel("fold input is not a (list, payload) pair: " +
                         in.str());
    }
    AmpVec out = eval(in);
    const std::size_t len = in.first().items().size();
    for (const auto& kv : out) {
      if (kv.first.first().items().size() != len) {
        throw std::logic_error("fold changed the list length of " + in.str());
      }
    }
    return out;
  }

 private:
  AmpVec eval(const Label& in) {
    const Label& xs = in.first();
    if (xs.items().empty()) return AmpVec::ret(in);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(in.str());
      if (it != memo_.end()) return it->second;
    }
    const Label& h = xs.items().front();
    AmpVec rest = eval(Label::pair(tail(xs), in.second()));
    AmpVec out;
    for (const auto& [tb, a] : rest) {
      for (const auto& [hb, c] : q_(Label::pair(h, tb.second()))) {
        out.accumulate(Label::pair(cons(hb.first(), tb.first()), hb.second()),
                       a * c);
      }
    }
    out.prune();
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(in.str(), out);
    return out;
  }

  KleisliOp q_;
  std::mutex mu_;
  std::unordered_map<std::string, AmpVec> memo_;
};

}  // namespace

FinBasis list_only_basis(std::size_t maxlen, const FinBasis& items) {
  std::vector<Label> out;
  std::vector<Label> xs;
  emit_lists(xs, maxlen, items, out);
  return FinBasis(std::move(out));
}

FinBasis list_basis(std::size_t maxlen, const FinBasis& items,
                    const FinBasis& payload) {
  return FinBasis::product(list_only_basis(maxlen, items), payload);
}

FinBasis pinned16_basis() {
  static const FinBasis basis = [] {
    std::vector<Label> labels = list_basis(2).labels();
    Label zeros = Label::list(
        {Label::bit(false), Label::bit(false), Label::bit(false)});
    labels.push_back(Label::pair(zeros, Label::bit(false)));
    labels.push_back(Label::pair(zeros, Label::bit(true)));
    return FinBasis(std::move(labels));
  }();
  return basis;
}

std::pair<FinBasis, FinBasis> split_product(const FinBasis& ab) {
  std::vector<Label> firsts, seconds;
  for (const Label& l : ab) {
    if (l.kind() != Label::Kind::pair) {
      throw BasisMismatch("not a product basis: " + ab.str());
    }
    if (std::find(firsts.begin(), firsts.end(), l.first()) == firsts.end()) {
      firsts.push_back(l.first());
    }
    if (std::find(seconds.begin(), seconds.end(), l.second()) ==
        seconds.end()) {
      seconds.push_back(l.second());
    }
  }
  FinBasis a(firsts), b(seconds);
  if (!(FinBasis::product(a, b) == ab)) {
    throw BasisMismatch("not a row-major product basis: " + ab.str());
  }
  return {a, b};
}

StepOp::StepOp(KleisliOp op, double tol) : op_(std::move(op)) {
  auto [a, b] = split_product(op_.src());
  auto [c, b2] = split_product(op_.tgt());
  if (!(b == b2)) {
    throw BasisMismatch("step must preserve the payload basis");
  }
  CMatrix m = materialize(op_);
  if (m.m.rows() != m.m.cols() || !is_unitary(m, tol)) {
    throw NotUnitary("quantamorphism step is not unitary");
  }
  items_in_ = a;
  items_out_ = c;
  payload_ = b;
}

KleisliOp fold_op(const KleisliOp& q, std::size_t maxlen) {
  auto [a, b] = split_product(q.src());
  auto [c, b2] = split_product(q.tgt());
  if (!(b == b2)) throw BasisMismatch("fold step must preserve the payload");
  auto core = std::make_shared<FoldCore>(q);
  return KleisliOp(list_basis(maxlen, a, b), list_basis(maxlen, c, b),
                   [core](const Label& in) { return core->apply(in); });
}

KleisliOp quantamorphism(const StepOp& f, std::size_t maxlen) {
  return fold_op(f.op(), maxlen);
}

KleisliOp quantamorphism(const StepOp& f, const FinBasis& basis) {
  if (!(f.items_in() == f.items_out())) {
    throw BasisMismatch("a quantamorphism on a fixed basis needs C == A");
  }
  auto core = std::make_shared<FoldCore>(f.op());
  return KleisliOp(basis, basis,
                   [core](const Label& in) { return core->apply(in); });
}

AmpVec run_quanta(const StepOp& f, const Label& input) {
  return FoldCore(f.op()).apply(input);
}

namespace {

void require_complemented(const Rel& f) {
  auto [a, b] = split_product(f.src());
  Rel g = pair(fst(a, b), f);
  if (!is_function(f)) throw std::invalid_argument("rfold needs a function");
  for (std::size_t j = 0; j < g.cols(); ++j) {
    std::size_t img = g.apply_index(j);
    for (std::size_t k = j + 1; k < g.cols(); ++k) {
      if (g.apply_index(k) == img) {
        throw NotComplemented("<fst,f> is not injective: " + f.src()[j].str() +
                              " and " + f.src()[k].str() + " both map to " +
                              g.tgt()[img].str());
      }
    }
  }
}

Label rfold_unchecked(const Rel& f, const Label& input) {
  const Label& xs = input.first();
  if (xs.items().empty()) return input;
  const Label& a = xs.items().front();
  Label rest = rfold_unchecked(f, Label::pair(tail(xs), input.second()));
  return Label::pair(cons(a, rest.first()),
                     f.apply(Label::pair(a, rest.second())));
}

}  // namespace

Label rfold(const Rel& f, const Label& input) {
  require_complemented(f);
  return rfold_unchecked(f, input);
}

Rel rfold_rel(const Rel& f, std::size_t maxlen) {
  require_complemented(f);
  auto [a, b] = split_product(f.src());
  FinBasis basis = list_basis(maxlen, a, b);
  return Rel::from_function(basis, basis, [&f](const Label& in) {
    return rfold_unchecked(f, in);
  });
}

Label classical_fold(const Rel& g, const Label& input) {
  const Label& xs = input.first();
  if (xs.items().empty()) return input;
  Label rest = classical_fold(g, Label::pair(tail(xs), input.second()));
  Label cb = g.apply(Label::pair(xs.items().front(), rest.second()));
  return Label::pair(cons(cb.first(), rest.first()), cb.second());
}

Rel classical_fold_rel(const Rel& g, std::size_t maxlen) {
  auto [a, b] = split_product(g.src());
  auto [c, b2] = split_product(g.tgt());
  if (!(b == b2)) throw BasisMismatch("fold step must preserve the payload");
  return Rel::from_function(
      list_basis(maxlen, a, b), list_basis(maxlen, c, b),
      [&g](const Label& in) { return classical_fold(g, in); });
}

FinBasis alpha_domain(std::size_t maxlen, const FinBasis& items,
                      const FinBasis& payload) {
  FinBasis right = maxlen == 0
                       ? FinBasis()
                       : FinBasis::product(
                             items, list_basis(maxlen - 1, items, payload));
  return FinBasis::coproduct(payload, right);
}

Rel alpha_rel(std::size_t maxlen, const FinBasis& items,
              const FinBasis& payload) {
  return Rel::from_function(
      alpha_domain(maxlen, items, payload), list_basis(maxlen, items, payload),
      [](const Label& x) {
        if (x.kind() == Label::Kind::left) {
          return Label::pair(Label::list({}), x.inner());
        }
        const Label& a = x.inner().first();
        const Label& xb = x.inner().second();
        return Label::pair(cons(a, xb.first()), xb.second());
      });
}

Rel alpha_inv_rel(std::size_t maxlen, const FinBasis& items,
                  const FinBasis& payload) {
  return converse(alpha_rel(maxlen, items, payload));
}

Rel assoc_rel(const FinBasis& a, const FinBasis& b, const FinBasis& c) {
  return Rel::from_function(
      FinBasis::product(a, FinBasis::product(b, c)),
      FinBasis::product(FinBasis::product(a, b), c), [](const Label& x) {
        return Label::pair(Label::pair(x.first(), x.second().first()),
                           x.second().second());
      });
}

Rel xl_rel(const FinBasis& a, const FinBasis& b, const FinBasis& c) {
  return Rel::from_function(
      FinBasis::product(a, FinBasis::product(b, c)),
      FinBasis::product(b, FinBasis::product(a, c)), [](const Label& x) {
        return Label::pair(x.second().first(),
                           Label::pair(x.first(), x.second().second()));
      });
}

Rel map_rel(const Rel& k, std::size_t maxlen, const FinBasis& payload) {
  return Rel::from_function(
      list_basis(maxlen, k.src(), payload),
      list_basis(maxlen, k.tgt(), payload), [&k](const Label& in) {
        std::vector<Label> ys;
        for (const Label& x : in.first().items()) ys.push_back(k.apply(x));
        return Label::pair(Label::list(std::move(ys)), in.second());
      });
}

Rel psi_rel(const Rel& x, std::size_t maxlen) {
  auto [a, b] = split_product(x.src());
  auto [c, b2] = split_product(x.tgt());
  if (!(b == b2)) throw BasisMismatch("Ψ needs a payload-preserving step");
  Rel right{FinBasis(), FinBasis()};
  if (maxlen > 0) {
    FinBasis l = list_only_basis(maxlen - 1, c);
    right = compose(xl_rel(l, c, b),
                    compose(product_map(Rel::identity(l), x), xl_rel(a, l, b)));
  }
  return compose(alpha_rel(maxlen, c, b), sum(Rel::identity(b), right));
}

KleisliOp psi(const KleisliOp& x, std::size_t maxlen) {
  auto [a, b] = split_product(x.src());
  auto [c, b2] = split_product(x.tgt());
  if (!(b == b2)) throw BasisMismatch("Ψ needs a payload-preserving step");
  KleisliOp right = ret_op(FinBasis());
  if (maxlen > 0) {
    FinBasis l = list_only_basis(maxlen - 1, c);
    right = kleisli(lift(xl_rel(l, c, b)),
                    kleisli(tensor(ret_op(l), x), lift(xl_rel(a, l, b))));
  }
  return kleisli(lift(alpha_rel(maxlen, c, b)),
                 direct_sum(ret_op(b), right));
}

KleisliOp quantamorphism_via_psi(const KleisliOp& q, std::size_t maxlen) {
  auto [a, b] = split_product(q.src());
  if (maxlen == 0) return ret_op(list_basis(0, a, b));
  KleisliOp inner = quantamorphism_via_psi(q, maxlen - 1);
  KleisliOp mid = direct_sum(ret_op(b), tensor(ret_op(a), inner));
  return kleisli(psi(q, maxlen),
                 kleisli(mid, lift(alpha_inv_rel(maxlen, a, b))));
}

Rel rel_cata(const Rel& h, std::size_t maxlen, const FinBasis& items,
             const FinBasis& payload) {
  const FinBasis& c = h.tgt();
  FinBasis expected =
      FinBasis::coproduct(payload, FinBasis::product(items, c));
  if (!(h.src() == expected)) {
    throw BasisMismatch("catamorphism gene has the wrong source: " +
                        h.src().str());
  }
  FinBasis src = list_basis(maxlen, items, payload);
  Rel out(src, c);
  std::unordered_map<std::string, std::vector<std::uint8_t>> memo;
  std::function<const std::vector<std::uint8_t>&(const Label&)> column =
      [&](const Label& in) -> const std::vector<std::uint8_t>& {
    auto it = memo.find(in.str());
    if (it != memo.end()) return it->second;
    std::vector<std::uint8_t> col(c.size(), 0);
    const Label& xs = in.first();
    auto hits = [&](const Label& arg) {
      std::size_t j = h.src().index_of(arg);
      for (std::size_t i = 0; i < c.size(); ++i) col[i] |= h.at(i, j);
    };
    if (xs.items().empty()) {
      hits(Label::left(in.second()));
    } else {
      const Label& a = xs.items().front();
      const auto& sub = column(Label::pair(tail(xs), in.second()));
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sub[k]) hits(Label::right(Label::pair(a, c[k])));
      }
    }
    return memo.emplace(in.str(), std::move(col)).first->second;
  };
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto& col = column(src[j]);
    for (std::size_t i = 0; i < c.size(); ++i) out.set(i, j, col[i]);
  }
  return out;
}

Rel in_rel(std::size_t maxlen, const FinBasis& items,
           const FinBasis& payload) {
  FinBasis lists = list_only_basis(maxlen, items);
  FinBasis src =
      FinBasis::coproduct(payload, FinBasis::product(items, lists));
  Rel out(src, lists);
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Label& x = src[j];
    if (x.kind() == Label::Kind::left) {
      out.set(lists.index_of(Label::list({})), j);
    } else if (x.inner().second().items().size() < maxlen) {
      out.set(lists.index_of(cons(x.inner().first(), x.inner().second())), j);
    }
  }
  return out;
}

}  // namespace quantakit
