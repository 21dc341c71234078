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

#include "quantakit/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "quantakit/circuit.hpp"
#include "quantakit/errors.hpp"
#include "quantakit/gates.hpp"
#include "quantakit/quanta.hpp"
#include "quantakit/relalg.hpp"
#include "quantakit/vecmonad.hpp"

namespace quantakit {

namespace {

constexpr double kLawTol = 1e-12;

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++r_.passed;
      return;
    }
    ++r_.failed;
    if (++per_name_[what] <= 3) r_.failures.push_back(what);
  }

  // Runs body and records an exception as a failure.
  void guard(const std::string& what, const std::function<bool()>& body) {
    try {
      check(body(), what);
    } catch (const std::exception& e) {
      check(false, what + " threw: " + e.what());
    }
  }

 private:
  SuiteReport& r_;
  std::map<std::string, int> per_name_;
};

FinBasis atoms(std::size_t n, const std::string& prefix) {
  std::vector<Label> ls;
  for (std::size_t i = 0; i < n; ++i) {
    ls.push_back(Label::atom(prefix + std::to_string(i)));
  }
  return FinBasis(std::move(ls));
}

// The relation whose entries are the bits of mask, row-major.
Rel rel_from_mask(const FinBasis& src, const FinBasis& tgt,
                  std::uint64_t mask) {
  Rel r(src, tgt);
  for (std::size_t k = 0; k < src.size() * tgt.size(); ++k) {
    if ((mask >> k) & 1) r.set(k / src.size(), k % src.size());
  }
  return r;
}

std::vector<Rel> all_relations(const FinBasis& src, const FinBasis& tgt) {
  std::vector<Rel> out;
  const std::uint64_t n = std::uint64_t{1} << (src.size() * tgt.size());
  for (std::uint64_t m = 0; m < n; ++m) {
    out.push_back(rel_from_mask(src, tgt, m));
  }
  return out;
}

std::vector<Rel> all_functions(const FinBasis& src, const FinBasis& tgt) {
  std::vector<Rel> out;
  std::vector<std::size_t> img(src.size(), 0);
  for (;;) {
    Rel r(src, tgt);
    for (std::size_t j = 0; j < src.size(); ++j) r.set(img[j], j);
    out.push_back(r);
    std::size_t j = 0;
    while (j < img.size() && ++img[j] == tgt.size()) img[j++] = 0;
    if (j == img.size()) return out;
  }
}

Rel random_rel(const FinBasis& src, const FinBasis& tgt, std::mt19937_64& rng,
               double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Rel r(src, tgt);
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) r.set(i, j, coin(rng));
  }
  return r;
}

Rel random_function(const FinBasis& src, const FinBasis& tgt,
                    std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, tgt.size() - 1);
  Rel r(src, tgt);
  for (std::size_t j = 0; j < src.size(); ++j) r.set(pick(rng), j);
  return r;
}

// Kernel as a bitmask over src x src, for fast subset tests.
std::uint64_t kernel_mask(const Rel& r) {
  Rel k = kernel(r);
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < k.entries().size(); ++i) {
    if (k.entries()[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

Amp random_amp(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

CMatrix random_matrix(const FinBasis& src, const FinBasis& tgt,
                      std::mt19937_64& rng, double density = 0.6) {
  std::bernoulli_distribution coin(density);
  CMatrix m{src, tgt,
            Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(tgt.size()),
                                   static_cast<Eigen::Index>(src.size()))};
  for (Eigen::Index i = 0; i < m.m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.m.cols(); ++j) {
      if (coin(rng)) m.m(i, j) = random_amp(rng);
    }
  }
  return m;
}

CMatrix random_unitary(const FinBasis& b, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = random_amp(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  return {b, b, q};
}

AmpVec random_vec(const FinBasis& b, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.7);
  AmpVec v;
  for (const Label& l : b) {
    if (coin(rng)) v.accumulate(l, random_amp(rng));
  }
  return v.prune();
}

const FinBasis& bits() {
  static const FinBasis b = FinBasis::bits();
  return b;
}

const FinBasis& bb() {
  static const FinBasis b = FinBasis::product(bits(), bits());
  return b;
}

// ---------------------------------------------------------------- relalg

void relalg_suite(Recorder& rec) {
  std::mt19937_64 rng(0x5eed0001);

  // Exchange law, exhaustive over 2-element bases.
  {
    std::vector<Rel> rels = all_relations(bits(), bits());
    for (const Rel& r : rels) {
      for (const Rel& s : rels) {
        Rel rs = pair(r, s);
        for (const Rel& t : rels) {
          for (const Rel& v : rels) {
            rec.check(either(rs, pair(t, v)) ==
                          pair(either(r, t), either(s, v)),
                      "exchange law (2-element bases)");
          }
        }
      }
    }
  }
  // Exchange law, random bases of sizes 1..3.
  std::uniform_int_distribution<std::size_t> size13(1, 3);
  for (int i = 0; i < 200; ++i) {
    FinBasis a = atoms(size13(rng), "a"), b = atoms(size13(rng), "b");
    FinBasis c = atoms(size13(rng), "c"), d = atoms(size13(rng), "d");
    Rel r = random_rel(a, c, rng), s = random_rel(a, d, rng);
    Rel t = random_rel(b, c, rng), v = random_rel(b, d, rng);
    rec.check(either(pair(r, s), pair(t, v)) ==
                  pair(either(r, t), either(s, v)),
              "exchange law (random bases)");
  }

  // Pairing upper bound, cancellation and ker <R,S> = ker R ∩ ker S, over
  // every relation between a 3- and a 2-element basis (both directions).
  for (auto [ns, nt] : {std::pair<std::size_t, std::size_t>{3, 2}, {2, 3}}) {
    FinBasis a = atoms(ns, "x"), b = atoms(nt, "y");
    std::vector<Rel> rels = all_relations(a, b);
    std::vector<std::uint64_t> ker;
    for (const Rel& r : rels) ker.push_back(kernel_mask(r));
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (std::size_t j = 0; j < rels.size(); ++j) {
        std::uint64_t kp = kernel_mask(pair(rels[i], rels[j]));
        rec.check(kp == (ker[i] & ker[j]), "kernel of a split is the meet");
        rec.check(subset(kp, ker[i]) && subset(kp, ker[j]),
                  "pairing increases injectivity");
        for (std::size_t x = 0; x < rels.size(); ++x) {
          bool lhs = subset(ker[x], kp);
          bool rhs = subset(ker[x], ker[i]) && subset(ker[x], ker[j]);
          rec.check(lhs == rhs, "pairing upper bound");
        }
      }
    }
    // The same law through the public predicate on a sample.
    for (int k = 0; k < 200; ++k) {
      const Rel& r = rels[rng() % rels.size()];
      const Rel& s = rels[rng() % rels.size()];
      const Rel& x = rels[rng() % rels.size()];
      rec.check(leq_injectivity(pair(r, s), x) ==
                    (leq_injectivity(r, x) && leq_injectivity(s, x)),
                "pairing upper bound via leq_injectivity");
    }
  }

  // Shunting: R . g <= S  ==  R <= S . g° for functions g.
  {
    FinBasis a = atoms(3, "a"), b = atoms(2, "b");
    FinBasis c = atoms(2, "c"), d = atoms(2, "d");
    auto rs = all_relations(b, c);
    auto ss = all_relations(a, d);
    for (const Rel& g : all_functions(a, b)) {
      for (const Rel& r : rs) {
        for (const Rel& s : ss) {
          rec.check(leq_injectivity(compose(r, g), s) ==
                        leq_injectivity(r, compose(s, converse(g))),
                    "shunting law");
        }
      }
    }
  }

  // Kernels of functions are equivalences.
  std::uniform_int_distribution<std::size_t> size26(2, 6), size24(2, 4);
  for (int i = 0; i < 50; ++i) {
    FinBasis a = atoms(size26(rng), "a"), b = atoms(size24(rng), "b");
    Rel k = kernel(random_function(a, b, rng));
    Rel id = Rel::identity(a);
    rec.check(includes(k, id) && k == converse(k) &&
                  includes(k, compose(k, k)),
              "kernel of a function is an equivalence");
  }

  // f bijective iff ker f = id and img f = id.
  {
    FinBasis a = atoms(3, "a");
    Rel id = Rel::identity(a);
    for (const Rel& f : all_functions(a, a)) {
      rec.check(is_bijection(f) == (kernel(f) == id && image(f) == id),
                "bijection iff kernel and image are identities");
    }
  }

  // Difunctionality against the column criterion.
  for (int i = 0; i < 300; ++i) {
    FinBasis a = atoms(size24(rng), "a"), b = atoms(size24(rng), "b");
    Rel r = random_rel(a, b, rng, i % 2 ? 0.3 : 0.6);
    bool oracle = true;
    for (std::size_t x = 0; x < r.cols() && oracle; ++x) {
      for (std::size_t y = 0; y < r.cols() && oracle; ++y) {
        bool meet_any = false, same = true;
        for (std::size_t k = 0; k < r.rows(); ++k) {
          meet_any = meet_any || (r.at(k, x) && r.at(k, y));
          same = same && r.at(k, x) == r.at(k, y);
        }
        oracle = !meet_any || same;
      }
    }
    rec.check(is_difunctional(r) == oracle, "difunctional column criterion");
  }

  // Minimal complements of every B x B -> B.
  for (const Rel& f : all_functions(bb(), bits())) {
    for (const Complement& c : minimal_complements(f)) {
      rec.check(is_injective(pair(f, c.quotient)),
                "complement makes the split injective");
      bool maximal = true;
      for (std::size_t x = 0; x < c.blocks.size() && maximal; ++x) {
        for (std::size_t y = x + 1; y < c.blocks.size() && maximal; ++y) {
          Rel merged = c.quotient;
          for (std::size_t j : c.blocks[y]) {
            merged.set(y, j, false);
            merged.set(x, j, true);
          }
          maximal = !is_injective(pair(f, merged));
        }
      }
      rec.check(maximal, "complement is coarsest");
    }
  }

  // U f is a self-inverse bijection for every f : B x B -> B, and recovers f.
  MonoidSpec m = MonoidSpec::xor_bits();
  for (const Rel& f : all_functions(bb(), bits())) {
    Rel u = u_construct(f, m);
    rec.check(compose(u, u) == Rel::identity(u.src()) && is_bijection(u),
              "U f is a self-inverse bijection");
    for (const Label& x : bb()) {
      Label out = u.apply(Label::pair(x, Label::bit(false)));
      rec.check(out.second() == f.apply(x), "snd . U f . (id, 0) = f");
    }
  }

  rec.check(compose(xor_rel(), gamma(bits())) ==
                either(Rel::identity(bits()), not_rel()),
            "xor . gamma = [id|not]");
}

// -------------------------------------------------------------- vecmonad

void vecmonad_suite(Recorder& rec) {
  std::mt19937_64 rng(0x5eed0002);
  std::uniform_int_distribution<std::size_t> size14(1, 4);

  for (int i = 0; i < 1000; ++i) {
    FinBasis a = atoms(size14(rng), "a"), b = atoms(size14(rng), "b");
    FinBasis c = atoms(size14(rng), "c");
    KleisliOp f = from_matrix(random_matrix(a, b, rng));
    KleisliOp g = from_matrix(random_matrix(b, c, rng));
    AmpVec v = random_vec(a, rng);
    const Label& x = a[rng() % a.size()];
    bool left = vec_equal(bind(AmpVec::ret(x), f), f(x), kLawTol);
    bool right = vec_equal(bind(v, ret_op(a)), v, kLawTol);
    bool assoc = vec_equal(bind(bind(v, f), g), bind(v, kleisli(g, f)),
                           kLawTol);
    rec.check(left && right && assoc, "monad laws");
  }

  for (int i = 0; i < 50; ++i) {
    FinBasis a = atoms(4, "a"), b = atoms(4, "b"), c = atoms(4, "c");
    CMatrix mf = random_matrix(a, b, rng), mg = random_matrix(b, c, rng);
    KleisliOp f = from_matrix(mf), g = from_matrix(mg);
    rec.check(max_abs_diff(materialize(kleisli(g, f)), matmul(mg, mf)) <=
                  kLawTol,
              "materialize preserves composition");
    rec.check(max_abs_diff(materialize(tensor(f, g)), kronecker(mf, mg)) <=
                  kLawTol,
              "tensor materializes to the Kronecker product");
    rec.check(materialize(ret_op(a)).m.isIdentity(0.0),
              "materialize preserves identity");
  }

  for (int i = 0; i < 50; ++i) {
    FinBasis a = atoms(2, "a"), b = atoms(4, "b");
    KleisliOp u = from_matrix(random_unitary(a, rng));
    KleisliOp w = from_matrix(random_unitary(a, rng));
    KleisliOp z = from_matrix(random_unitary(b, rng));
    rec.check(is_unitary(materialize(kleisli(w, u))) &&
                  is_unitary(materialize(tensor(u, z))),
              "unitaries are closed under composition and tensor");
  }

  for (int i = 0; i < 50; ++i) {
    FinBasis a = atoms(4, "a");
    AmpVec v = random_vec(a, rng);
    AmpVec raw = v;
    raw.accumulate(Label::atom("tiny"), Amp(kPruneEps / 2, 0.0));
    AmpVec pruned = raw;
    pruned.prune();
    rec.check(vec_equal(raw, v, 10 * kPruneEps) == vec_equal(pruned, v,
                                                             10 * kPruneEps),
              "pruning does not change equality");
    rec.check(vec_equal(add(v, scale(-1.0, v)), AmpVec(), kLawTol),
              "v - v = 0");
  }
}

// ----------------------------------------------------------------- gates

void gates_suite(Recorder& rec) {
  std::mt19937_64 rng(0x5eed0003);
  const GateLibrary& lib = GateLibrary::standard();
  for (const auto& name : lib.names()) {
    rec.guard("library gate " + name + " is unitary",
              [&] { return is_unitary(materialize(lib.get(name))); });
  }

  KleisliOp id = ret_op(bits());
  KleisliOp neg = x_gate();
  rec.check(matrix_close(materialize(lift(cnot_rel())),
                         materialize(choice(id, neg)), 0.0),
            "<fst,xor> = id ⋄ not");
  rec.check(ccnot_rel() ==
                Rel::from_function(FinBasis::product(bb(), bits()),
                                   FinBasis::product(bb(), bits()),
                                   [](const Label& x) {
                                     bool fire = x.first().first().as_bit() &&
                                                 x.first().second().as_bit();
                                     return fire
                                                ? Label::pair(
                                                      x.first(),
                                                      Label::bit(!x.second()
                                                                      .as_bit()))
                                                : x;
                                   }),
            "U(and) = ccnot truth table");

  for (const KleisliOp& f : {id, neg}) {
    for (const KleisliOp& g : {id, neg}) {
      CMatrix m = materialize(choice(f, g));
      bool perm = true;
      try {
        (void)permutation_of(m, 0.0);
      } catch (const OutOfScope&) {
        perm = false;
      }
      rec.check(perm, "choice of classical bijections is a permutation");
    }
  }

  for (int i = 0; i < 50; ++i) {
    KleisliOp p = from_matrix(random_unitary(bits(), rng));
    KleisliOp f = from_matrix(random_unitary(bits(), rng));
    KleisliOp g = from_matrix(random_unitary(bits(), rng));
    rec.check(is_unitary(materialize(mccarthy(p, f, g))),
              "mccarthy of unitaries is unitary");
    rec.check(op_equal(mccarthy(id, f, g), choice(g, f), kLawTol),
              "mccarthy with identity predicate is choice");
  }

  CMatrix t = materialize(tgate());
  Eigen::MatrixXcd t8 = Eigen::MatrixXcd::Identity(2, 2);
  for (int i = 0; i < 8; ++i) t8 = t.m * t8;
  rec.check(t8.isApprox(Eigen::MatrixXcd::Identity(2, 2), kLawTol) &&
                !(t.m * t.m * t.m * t.m).isApprox(
                    Eigen::MatrixXcd::Identity(2, 2), 1e-6),
            "T has order 8");
  CMatrix h = materialize(had());
  rec.check((h.m * h.m).isApprox(Eigen::MatrixXcd::Identity(2, 2), kLawTol),
            "H is self-inverse");

  rec.check(op_equal(bell(), kleisli(cnot(), tensor(had(), id)), kLawTol),
            "bell = cnot . (H ⊗ id)");
  rec.check(matrix_close(materialize(unbell()), dagger(materialize(bell())),
                         kLawTol),
            "unbell = bell†");
  rec.check(op_equal(unbell(), kleisli(tensor(had(), id), cnot()), kLawTol),
            "unbell = (H ⊗ id) . cnot");
  {
    CMatrix a = materialize(lift(assoc_rel(bits(), bits(), bits())));
    CMatrix oracle = matmul(
        kronecker(dagger(materialize(bell())), materialize(id)),
        matmul(a, kronecker(materialize(id), materialize(bell()))));
    rec.check(matrix_close(materialize(alice()), oracle, kLawTol),
              "alice = (B† ⊗ id) . a . (id ⊗ B)");
  }
  rec.check(op_equal(mccarthy(had(), neg, had()), cond(), kLawTol),
            "H → X, H = cond");
}

// ----------------------------------------------------------------- quanta

void quanta_suite(Recorder& rec) {
  std::mt19937_64 rng(0x5eed0004);

  auto length_preserving = [](const KleisliOp& op) {
    for (const Label& in : op.src()) {
      for (const auto& kv : op(in)) {
        if (kv.first.first().items().size() != in.first().items().size()) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<KleisliOp> steps = {cnot(), bell()};
  for (int i = 0; i < 20; ++i) {
    CMatrix u = random_unitary(bb(), rng);
    steps.push_back(from_matrix(u));
    rec.guard("quantamorphism of a random unitary step is unitary", [&] {
      KleisliOp q = quantamorphism(StepOp(from_matrix(u)), 2);
      return is_unitary(materialize(q)) && length_preserving(q);
    });
  }

  for (std::size_t n = 0; n <= 3; ++n) {
    rec.check(materialize(quantamorphism(StepOp(ret_op(bb())), n))
                  .m.isIdentity(0.0),
              "reflexion: ⦇id⦈ = id");
  }

  // Free theorems for every k : B -> B.
  for (const Rel& k : all_functions(bits(), bits())) {
    KleisliOp k_id = lift(product_map(k, Rel::identity(bits())));
    KleisliOp map_k = lift(map_rel(k, 2, bits()));
    for (std::size_t s = 0; s < 5; ++s) {
      const KleisliOp& f = steps[s];
      rec.check(op_equal(kleisli(fold_op(f, 2), map_k),
                         fold_op(kleisli(f, k_id), 2), kLawTol),
                "free theorem ⦇f⦈ . (map k x id) = ⦇f . (k x id)⦈");
      rec.check(op_equal(kleisli(map_k, fold_op(f, 2)),
                         fold_op(kleisli(k_id, f), 2), kLawTol),
                "free theorem (map k x id) . ⦇f⦈ = ⦇(k x id) . f⦈");
    }
  }

  // Banana-split with in and every gene B + B x B -> B, then random pairs.
  {
    const std::size_t n = 2;
    FinBasis lists = list_only_basis(n);
    Rel in = in_rel(n, bits(), bits());
    FinBasis gene_src =
        FinBasis::coproduct(bits(), FinBasis::product(bits(), bits()));
    std::vector<Rel> genes = all_functions(gene_src, bits());
    auto banana = [&](const Rel& f, const Rel& g) {
      const FinBasis& c1 = f.tgt();
      const FinBasis& c2 = g.tgt();
      Rel ffst = sum(Rel::identity(bits()),
                     product_map(Rel::identity(bits()), fst(c1, c2)));
      Rel fsnd = sum(Rel::identity(bits()),
                     product_map(Rel::identity(bits()), snd(c1, c2)));
      Rel gene = compose(product_map(f, g), pair(ffst, fsnd));
      return pair(rel_cata(f, n, bits(), bits()),
                  rel_cata(g, n, bits(), bits())) ==
             rel_cata(gene, n, bits(), bits());
    };
    for (const Rel& g : genes) {
      rec.guard("banana-split with in", [&] { return banana(in, g); });
    }
    for (int i = 0; i < 100; ++i) {
      rec.guard("banana-split", [&] {
        return banana(genes[rng() % genes.size()], genes[rng() % genes.size()]);
      });
    }
    (void)lists;
  }

  for (std::size_t n = 0; n <= 3; ++n) {
    rec.check(rel_cata(in_rel(n, bits(), bits()), n, bits(), bits()) ==
                  fst(list_only_basis(n), bits()),
              "fst = ⦇in⦈");
    rec.check(psi_rel(Rel::identity(bb()), n) == alpha_rel(n),
              "Ψ id = α (relations)");
    rec.check(op_equal(psi(ret_op(bb()), n), lift(alpha_rel(n)), 0.0),
              "Ψ id = α (matrices)");
    Rel al = alpha_rel(n);
    rec.check(compose(al, converse(al)) == Rel::identity(al.tgt()) &&
                  compose(converse(al), al) == Rel::identity(al.src()),
              "α is an isomorphism");
  }

  // Ψ preserves injectivity.
  {
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Rel x(bb(), bb());
      for (std::size_t j = 0; j < 4; ++j) x.set(perm[j], j);
      for (std::size_t n = 1; n <= 2; ++n) {
        rec.check(is_injective(psi_rel(x, n)), "Ψ preserves injectivity");
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    FinBasis c3 = atoms(3, "c");
    FinBasis cb = FinBasis::product(c3, bits());
    for (const Rel& x : all_functions(bb(), cb)) {
      if (!is_injective(x)) continue;
      rec.check(is_injective(psi_rel(x, 2)),
                "Ψ preserves injectivity (wider items)");
    }
  }

  // Injectivity promotion: <fst,f> injective => <fst, ⦇[id|f]⦈> injective.
  for (const FinBasis& payload : {bits(), atoms(3, "p")}) {
    FinBasis ab = FinBasis::product(bits(), payload);
    for (const Rel& f : all_functions(ab, payload)) {
      if (!is_injective(pair(fst(bits(), payload), f))) continue;
      Rel gene = either(Rel::identity(payload), f);
      for (std::size_t n = 0; n <= (payload.size() == 2 ? 3u : 2u); ++n) {
        Rel fold = rel_cata(gene, n, bits(), payload);
        Rel split = pair(fst(list_only_basis(n), payload), fold);
        rec.check(is_injective(split), "fst-complementation is promoted");
        rec.check(split == rfold_rel(f, n), "rfold = <fst, ⦇[id|f]⦈>");
      }
    }
  }

  // The fused Ψ diagram agrees with the monadic recursion.
  for (std::size_t s = 0; s < 5; ++s) {
    for (std::size_t n = 0; n <= 2; ++n) {
      rec.check(op_equal(quantamorphism_via_psi(steps[s], n),
                         fold_op(steps[s], n), kLawTol),
                "⦇Q⦈ = Ψ Q . (id ⊕ id ⊗ ⦇Q⦈) . α°");
    }
  }

  // a° . (id x snd) = xl . (snd x id), precomposed with β.
  {
    const FinBasis& b = bits();
    Rel beta = pair(product_map(Rel::identity(b), fst(b, b)),
                    product_map(Rel::identity(b), snd(b, b)));
    Rel lhs = compose(converse(assoc_rel(b, b, b)),
                      product_map(Rel::identity(bb()), snd(b, b)));
    Rel rhs = compose(xl_rel(b, b, b), product_map(snd(b, b),
                                                   Rel::identity(bb())));
    rec.check(compose(lhs, beta) == compose(rhs, beta),
              "a° . (id x snd) . β = xl . (snd x id) . β");
    Rel xl = xl_rel(b, b, b);
    rec.check(compose(xl, xl) == Rel::identity(xl.src()), "xl . xl = id");
  }

  for (std::size_t n = 0; n <= 3; ++n) {
    Rel r = rfold_rel(xor_rel(), n);
    rec.check(is_bijection(r), "rfold is a bijection");
    rec.check(op_equal(lift(r), quantamorphism(StepOp(cnot()), n), 0.0),
              "rfold xor = ⦇cnot⦈");
  }

  {
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Rel g(bb(), bb());
      for (std::size_t j = 0; j < 4; ++j) g.set(perm[j], j);
      rec.check(op_equal(lift(classical_fold_rel(g, 2)), fold_op(lift(g), 2),
                         0.0),
                "classical fold = quantamorphism of a lifted bijection");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

// ------------------------------------------------------------- circuitgen

std::string to_bits(std::size_t x, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int q = 0; q < width; ++q) {
    if ((x >> (width - 1 - q)) & 1) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

CMatrix permutation_matrix(const FinBasis& b,
                           const std::vector<std::size_t>& perm) {
  CMatrix m{b, b,
            Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(b.size()),
                                   static_cast<Eigen::Index>(b.size()))};
  for (std::size_t j = 0; j < perm.size(); ++j) {
    m.m(static_cast<Eigen::Index>(perm[j]), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return m;
}

FinBasis bitstring_basis(int k) {
  std::vector<Label> ls;
  for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
    std::string s = to_bits(i, k);
    ls.push_back(k == 1 ? Label::bit(s == "1") : Label::atom(s));
  }
  return FinBasis(std::move(ls));
}

void circuitgen_suite(Recorder& rec) {
  std::mt19937_64 rng(0x5eed0005);

  // decompose_mcx against the abstract gate, every polarity and input.
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> controls;
    for (int i = 0; i < n; ++i) controls.push_back(i);
    std::vector<int> ancillas;
    for (int i = 0; i < std::max(0, n - 2); ++i) ancillas.push_back(n + 1 + i);
    for (std::size_t pmask = 0; pmask < (std::size_t{1} << n); ++pmask) {
      std::vector<bool> pol;
      for (int i = 0; i < n; ++i) pol.push_back((pmask >> i) & 1);
      Circuit c;
      c.data_qubits = n + 1;
      c.ancilla_qubits = static_cast<int>(ancillas.size());
      c.gates = decompose_mcx(controls, pol, n, ancillas);
      bool only_basic = std::all_of(c.gates.begin(), c.gates.end(),
                                    [](const Gate& g) {
                                      return g.kind == GateKind::X ||
                                             g.kind == GateKind::CX ||
                                             g.kind == GateKind::CCX;
                                    });
      rec.check(only_basic, "decompose_mcx emits X/CX/CCX only");
      bool ok = true;
      for (std::size_t x = 0; x < (std::size_t{1} << (n + 1)) && ok; ++x) {
        std::string in = to_bits(x, n + 1);
        bool fire = true;
        for (int i = 0; i < n; ++i) fire = fire && ((in[i] == '1') == pol[i]);
        std::string want = in;
        if (fire) want[n] = want[n] == '1' ? '0' : '1';
        try {
          ok = simulate(c, in) == want;
        } catch (const std::exception&) {
          ok = false;
        }
      }
      rec.check(ok, "decompose_mcx truth table (" + std::to_string(n) +
                        " controls)");
    }
  }

  // Random permutations: soundness and ancilla hygiene.
  for (int k = 1; k <= 5; ++k) {
    FinBasis b = bitstring_basis(k);
    Encoding enc = Encoding::natural(b);
    for (int i = 0; i < 8; ++i) {
      std::vector<std::size_t> perm(b.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      rec.guard("synthesized permutation is sound", [&] {
        Circuit c = synth_permutation(permutation_matrix(b, perm), enc);
        for (std::size_t x = 0; x < b.size(); ++x) {
          if (simulate(c, to_bits(x, k)) != to_bits(perm[x], k)) return false;
        }
        return true;
      });
    }
  }

  // The pinned ⦇cnot⦈ circuit.
  rec.guard("⦇cnot⦈ circuit matches its matrix", [&] {
    Encoding enc = Encoding::pinned16();
    CMatrix m = materialize(quantamorphism(StepOp(cnot()), enc.basis()));
    Circuit c = synth_permutation(m, enc);
    auto perm = permutation_of(m);
    for (std::size_t x = 0; x < 16; ++x) {
      if (simulate(c, enc.bits_of(x)) != enc.bits_of(perm[x])) return false;
    }
    return true;
  });

  // Peephole never changes behaviour.
  for (int i = 0; i < 100; ++i) {
    Circuit c;
    c.data_qubits = 4;
    std::uniform_int_distribution<int> q(0, 3), kind(0, 2);
    for (int g = 0; g < 24; ++g) {
      int t = q(rng), a = (t + 1 + q(rng) % 3) % 4;
      int b2 = a;
      while (b2 == a || b2 == t) b2 = q(rng);
      Gate gate = kind(rng) == 0   ? Gate::x(t)
                  : kind(rng) == 1 ? Gate::cx(a, t)
                                   : Gate::ccx(a, b2, t);
      c.gates.push_back(gate);
      if (g % 3 == 0) c.gates.push_back(gate);
    }
    Circuit p = c;
    p.gates = peephole(c.gates);
    bool same = true;
    for (std::size_t x = 0; x < 16 && same; ++x) {
      same = simulate(c, to_bits(x, 4)) == simulate(p, to_bits(x, 4));
    }
    rec.check(same && p.gates.size() <= c.gates.size(),
              "peephole preserves behaviour");
  }

  // QASM round trip, Toffoli expansion and statevector agreement.
  for (int i = 0; i < 20; ++i) {
    int k = 2 + i % 3;
    FinBasis b = bitstring_basis(k);
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CMatrix m = permutation_matrix(b, perm);
    Circuit c = synth_permutation(m, Encoding::natural(b));
    rec.guard("qasm round trip", [&] {
      return parse_qasm(export_qasm(c)) == c;
    });
    Circuit ct = expand_toffoli(c);
    rec.guard("Clifford+T expansion agrees with the permutation", [&] {
      for (std::size_t x = 0; x < b.size(); ++x) {
        AmpVec out = simulate_state(ct, AmpVec::ret(b[x]));
        if (!vec_equal(out, AmpVec::ret(b[perm[x]]), kDefaultTol)) {
          return false;
        }
      }
      return true;
    });
    rec.guard("simulate_state agrees with the matrix action", [&] {
      AmpVec v = random_vec(b, rng);
      return vec_equal(simulate_state(c, v), bind(v, from_matrix(m)),
                       kDefaultTol);
    });
    Metrics mt = metrics(c);
    rec.check(mt.depth <= mt.size && mt.cx <= mt.size &&
                  mt.size == c.gates.size(),
              "metrics are consistent");
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"relalg", "vecmonad", "gates", "quanta", "circuitgen"};
}

SuiteReport run_suite(const std::string& name) {
  static const std::map<std::string, void (*)(Recorder&)> suites = {
      {"relalg", relalg_suite},
      {"vecmonad", vecmonad_suite},
      {"gates", gates_suite},
      {"quanta", quanta_suite},
      {"circuitgen", circuitgen_suite}};
  auto it = suites.find(name);
  if (it == suites.end()) throw UnknownLabel("unknown check suite: " + name);
  SuiteReport report;
  report.name = name;
  Recorder rec(report);
  auto start = std::chrono::steady_clock::now();
  try {
    it->second(rec);
  } catch (const std::exception& e) {
    rec.check(false, std::string("suite aborted: ") + e.what());
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::vector<SuiteReport> run_all_suites() {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name));
  return out;
}

}  // namespace quantakit
