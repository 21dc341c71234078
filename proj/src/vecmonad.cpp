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

#include "quantakit/vecmonad.hpp"

#include <cmath>
#include <stdexcept>

#include "quantakit/errors.hpp"
#include "quantakit/parallel.hpp"

namespace quantakit {

AmpVec AmpVec::ret(const Label& x) {
  AmpVec v;
  v.entries_.emplace(x, Amp(1.0, 0.0));
  return v;
}

void AmpVec::accumulate(const Label& x, Amp a) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw std::invalid_argument("non-finite amplitude at " + x.str());
  }
  entries_[x] += a;
}

AmpVec& AmpVec::prune(double eps) {
  std::erase_if(entries_, [eps](const auto& kv) {
    return std::abs(kv.second) < eps;
  });
  return *this;
}

Amp AmpVec::at(const Label& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? Amp(0.0, 0.0) : it->second;
}

AmpVec scale(Amp k, const AmpVec& v) {
  AmpVec out;
  for (const auto& [x, a] : v) out.accumulate(x, k * a);
  return out.prune();
}

AmpVec add(const AmpVec& u, const AmpVec& v) {
  AmpVec out = u;
  for (const auto& [x, a] : v) out.accumulate(x, a);
  return out.prune();
}

double norm(const AmpVec& v) {
  double s = 0.0;
  for (const auto& kv : v) s += std::norm(kv.second);
  return std::sqrt(s);
}

bool vec_equal(const AmpVec& u, const AmpVec& v, double tol) {
  for (const auto& [x, a] : u) {
    if (std::abs(a - v.at(x)) > tol) return false;
  }
  for (const auto& [x, a] : v) {
    if (std::abs(a - u.at(x)) > tol) return false;
  }
  return true;
}

KleisliOp::KleisliOp(FinBasis src, FinBasis tgt, Fn fn)
    : src_(std::move(src)), tgt_(std::move(tgt)), fn_(std::move(fn)) {}

AmpVec KleisliOp::operator()(const Label& x) const {
  if (!src_.contains(x)) {
    throw UnknownLabel("input " + x.str() + " outside source basis " +
                       src_.str());
  }
  AmpVec out = fn_(x);
  for (const auto& kv : out) {
    if (!tgt_.contains(kv.first)) {
      throw UnknownLabel("output " + kv.first.str() +
                         " outside target basis " + tgt_.str());
    }
  }
  return out;
}

KleisliOp ret_op(const FinBasis& a) {
  return KleisliOp(a, a, [](const Label& x) { return AmpVec::ret(x); });
}

AmpVec bind(const AmpVec& v, const KleisliOp& f) {
  AmpVec out;
  for (const auto& [x, a] : v) {
    for (const auto& [y, b] : f(x)) out.accumulate(y, a * b);
  }
  return out.prune();
}

KleisliOp kleisli(const KleisliOp& g, const KleisliOp& f) {
  if (!(f.tgt() == g.src())) {
    throw BasisMismatch("kleisli: " + f.tgt().str() + " vs " + g.src().str());
  }
  return KleisliOp(f.src(), g.tgt(),
                   [f, g](const Label& x) { return bind(f(x), g); });
}

KleisliOp tensor(const KleisliOp& f, const KleisliOp& g) {
  return KleisliOp(FinBasis::product(f.src(), g.src()),
                   FinBasis::product(f.tgt(), g.tgt()),
                   [f, g](const Label& ab) {
                     AmpVec fx = f(ab.first());
                     AmpVec gy = g(ab.second());
                     AmpVec out;
                     for (const auto& [x, a] : fx) {
                       for (const auto& [y, b] : gy) {
                         out.accumulate(Label::pair(x, y), a * b);
                       }
                     }
                     return out.prune();
                   });
}

KleisliOp direct_sum(const KleisliOp& f, const KleisliOp& g) {
  return KleisliOp(FinBasis::coproduct(f.src(), g.src()),
                   FinBasis::coproduct(f.tgt(), g.tgt()),
                   [f, g](const Label& x) {
                     bool left = x.kind() == Label::Kind::left;
                     AmpVec inner = left ? f(x.inner()) : g(x.inner());
                     AmpVec out;
                     for (const auto& [y, a] : inner) {
                       out.accumulate(left ? Label::left(y) : Label::right(y),
                                      a);
                     }
                     return out;
                   });
}

KleisliOp from_matrix(const CMatrix& m) {
  return KleisliOp(m.src, m.tgt, [m](const Label& x) {
    std::size_t j = m.src.index_of(x);
    AmpVec out;
    for (Eigen::Index i = 0; i < m.m.rows(); ++i) {
      if (m.m(i, j) != Amp(0.0, 0.0)) {
        out.accumulate(m.tgt[static_cast<std::size_t>(i)], m.m(i, j));
      }
    }
    return out.prune();
  });
}

CMatrix materialize(const KleisliOp& f) { return materialize(f, f.tgt()); }

CMatrix materialize(const KleisliOp& f, const FinBasis& tgt) {
  CMatrix out{f.src(), tgt,
              Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(tgt.size()),
                                     static_cast<Eigen::Index>(f.src().size()))};
  parallel_for(f.src().size(), [&](std::size_t j) {
    for (const auto& [y, a] : f(f.src()[j])) {
      auto i = tgt.find(y);
      if (!i) throw UnknownLabel("materialize: stray label " + y.str());
      out.m(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(j)) = a;
    }
  });
  return out;
}

CMatrix dagger(const CMatrix& m) { return {m.tgt, m.src, m.m.adjoint()}; }

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (!(b.tgt == a.src)) throw BasisMismatch("matmul: basis mismatch");
  return {b.src, a.tgt, a.m * b.m};
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index ar = a.m.rows(), ac = a.m.cols();
  const Eigen::Index br = b.m.rows(), bc = b.m.cols();
  Eigen::MatrixXcd k(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i) {
    for (Eigen::Index j = 0; j < ac; ++j) {
      k.block(i * br, j * bc, br, bc) = a.m(i, j) * b.m;
    }
  }
  return {FinBasis::product(a.src, b.src), FinBasis::product(a.tgt, b.tgt), k};
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.m.rows() != m.m.cols()) {
    throw BasisMismatch("is_unitary: matrix is not square");
  }
  const auto n = m.m.rows();
  if (n == 0) return true;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  return ((m.m.adjoint() * m.m) - id).cwiseAbs().maxCoeff() <= tol &&
         ((m.m * m.m.adjoint()) - id).cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols()) {
    throw BasisMismatch("matrix shapes differ");
  }
  if (a.m.size() == 0) return 0.0;
  return (a.m - b.m).cwiseAbs().maxCoeff();
}

bool matrix_close(const CMatrix& a, const CMatrix& b, double tol) {
  return a.src == b.src && a.tgt == b.tgt && max_abs_diff(a, b) <= tol;
}

bool op_equal(const KleisliOp& f, const KleisliOp& g, double tol) {
  return matrix_close(materialize(f), materialize(g), tol);
}

}  // namespace quantakit
