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

#include "quantakit/relalg.hpp"

#include <algorithm>
#include <sstream>

#include "quantakit/errors.hpp"

namespace quantakit {

namespace {

void require_same(const FinBasis& a, const FinBasis& b, const char* what) {
  if (!(a == b)) {
    throw BasisMismatch(std::string(what) + ": " + a.str() + " vs " + b.str());
  }
}

}  // namespace

Rel::Rel(FinBasis src, FinBasis tgt)
    : src_(std::move(src)),
      tgt_(std::move(tgt)),
      entries_(src_.size() * tgt_.size(), 0) {}

Rel::Rel(FinBasis src, FinBasis tgt, std::vector<std::uint8_t> entries)
    : src_(std::move(src)), tgt_(std::move(tgt)), entries_(std::move(entries)) {
  if (entries_.size() != src_.size() * tgt_.size()) {
    throw std::invalid_argument("relation matrix has wrong size");
  }
  for (auto& e : entries_) e = e ? 1 : 0;
}

Rel Rel::identity(const FinBasis& a) {
  Rel r(a, a);
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, i);
  return r;
}

Rel Rel::from_function(const FinBasis& src, const FinBasis& tgt,
                       const std::function<Label(const Label&)>& f) {
  Rel r(src, tgt);
  for (std::size_t j = 0; j < src.size(); ++j) {
    r.set(tgt.index_of(f(src[j])), j);
  }
  return r;
}

Rel Rel::from_predicate(
    const FinBasis& src, const FinBasis& tgt,
    const std::function<bool(const Label&, const Label&)>& p) {
  Rel r(src, tgt);
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (p(tgt[i], src[j])) r.set(i, j);
    }
  }
  return r;
}

Rel Rel::bang(const FinBasis& a) {
  return from_function(a, FinBasis::unit(),
                       [](const Label&) { return Label::atom("*"); });
}

bool Rel::relates(const Label& b, const Label& a) const {
  return at(tgt_.index_of(b), src_.index_of(a));
}

std::size_t Rel::apply_index(std::size_t col) const {
  std::size_t found = rows();
  for (std::size_t i = 0; i < rows(); ++i) {
    if (!at(i, col)) continue;
    if (found != rows()) {
      throw std::domain_error("relation is not simple at " + src_[col].str());
    }
    found = i;
  }
  if (found == rows()) {
    throw std::domain_error("relation is not entire at " + src_[col].str());
  }
  return found;
}

Label Rel::apply(const Label& a) const {
  return tgt_[apply_index(src_.index_of(a))];
}

std::string Rel::str(bool with_labels) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (with_labels) out << tgt_[i].str() << ": ";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) out << ' ';
      out << (at(i, j) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

bool operator==(const Rel& a, const Rel& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.entries_ == b.entries_;
}

Rel compose(const Rel& r, const Rel& s) {
  require_same(s.tgt(), r.src(), "compose");
  Rel out(s.src(), r.tgt());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t k = 0; k < r.cols(); ++k) {
      if (!r.at(i, k)) continue;
      for (std::size_t j = 0; j < s.cols(); ++j) {
        if (s.at(k, j)) out.set(i, j);
      }
    }
  }
  return out;
}

Rel converse(const Rel& r) {
  Rel out(r.tgt(), r.src());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (r.at(i, j)) out.set(j, i);
    }
  }
  return out;
}

Rel kernel(const Rel& r) { return compose(converse(r), r); }
Rel image(const Rel& r) { return compose(r, converse(r)); }

Rel meet(const Rel& r, const Rel& s) {
  require_same(r.src(), s.src(), "meet source");
  require_same(r.tgt(), s.tgt(), "meet target");
  std::vector<std::uint8_t> e(r.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = r.entries()[i] & s.entries()[i];
  }
  return Rel(r.src(), r.tgt(), std::move(e));
}

Rel join(const Rel& r, const Rel& s) {
  require_same(r.src(), s.src(), "join source");
  require_same(r.tgt(), s.tgt(), "join target");
  std::vector<std::uint8_t> e(r.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = r.entries()[i] | s.entries()[i];
  }
  return Rel(r.src(), r.tgt(), std::move(e));
}

bool includes(const Rel& s, const Rel& r) {
  require_same(r.src(), s.src(), "inclusion source");
  require_same(r.tgt(), s.tgt(), "inclusion target");
  for (std::size_t i = 0; i < r.entries().size(); ++i) {
    if (r.entries()[i] && !s.entries()[i]) return false;
  }
  return true;
}

Rel pair(const Rel& r, const Rel& s) {
  require_same(r.src(), s.src(), "pair source");
  Rel out(r.src(), FinBasis::product(r.tgt(), s.tgt()));
  for (std::size_t b = 0; b < r.rows(); ++b) {
    for (std::size_t c = 0; c < s.rows(); ++c) {
      for (std::size_t a = 0; a < r.cols(); ++a) {
        if (r.at(b, a) && s.at(c, a)) out.set(b * s.rows() + c, a);
      }
    }
  }
  return out;
}

Rel either(const Rel& r, const Rel& s) {
  require_same(r.tgt(), s.tgt(), "either target");
  Rel out(FinBasis::coproduct(r.src(), s.src()), r.tgt());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) out.set(i, j, r.at(i, j));
    for (std::size_t j = 0; j < s.cols(); ++j) {
      out.set(i, r.cols() + j, s.at(i, j));
    }
  }
  return out;
}

Rel inj1(const FinBasis& a, const FinBasis& b) {
  Rel out(a, FinBasis::coproduct(a, b));
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, i);
  return out;
}

Rel inj2(const FinBasis& a, const FinBasis& b) {
  Rel out(b, FinBasis::coproduct(a, b));
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, i);
  return out;
}

Rel sum(const Rel& r, const Rel& s) {
  return either(compose(inj1(r.tgt(), s.tgt()), r),
                compose(inj2(r.tgt(), s.tgt()), s));
}

Rel product_map(const Rel& r, const Rel& s) {
  Rel out(FinBasis::product(r.src(), s.src()),
          FinBasis::product(r.tgt(), s.tgt()));
  for (std::size_t b = 0; b < r.rows(); ++b) {
    for (std::size_t a = 0; a < r.cols(); ++a) {
      if (!r.at(b, a)) continue;
      for (std::size_t d = 0; d < s.rows(); ++d) {
        for (std::size_t c = 0; c < s.cols(); ++c) {
          if (s.at(d, c)) out.set(b * s.rows() + d, a * s.cols() + c);
        }
      }
    }
  }
  return out;
}

Rel fst(const FinBasis& a, const FinBasis& b) {
  Rel out(FinBasis::product(a, b), a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out.set(i, i * b.size() + j);
  }
  return out;
}

Rel snd(const FinBasis& a, const FinBasis& b) {
  Rel out(FinBasis::product(a, b), b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out.set(j, i * b.size() + j);
  }
  return out;
}

Rel gamma(const FinBasis& a) {
  Rel out(FinBasis::coproduct(a, a), FinBasis::product(FinBasis::bits(), a));
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.set(i, i);
    out.set(a.size() + i, a.size() + i);
  }
  return out;
}

bool is_injective(const Rel& r) {
  return includes(Rel::identity(r.src()), kernel(r));
}
bool is_simple(const Rel& r) {
  return includes(Rel::identity(r.tgt()), image(r));
}
bool is_entire(const Rel& r) {
  return includes(kernel(r), Rel::identity(r.src()));
}
bool is_surjective(const Rel& r) {
  return includes(image(r), Rel::identity(r.tgt()));
}
bool is_function(const Rel& r) { return is_simple(r) && is_entire(r); }
bool is_bijection(const Rel& r) {
  return is_function(r) && is_injective(r) && is_surjective(r);
}

bool leq_injectivity(const Rel& r, const Rel& s) {
  require_same(r.src(), s.src(), "injectivity preorder source");
  return includes(kernel(r), kernel(s));
}

bool is_difunctional(const Rel& r) {
  return includes(r, compose(r, compose(converse(r), r)));
}

namespace {

// Depth-first generation of restricted-growth strings, pruned so that no
// block ever holds two elements with the same image. Every valid partition
// is produced once.
class ComplementSearch {
 public:
  ComplementSearch(std::vector<std::size_t> images, std::size_t n_images)
      : images_(std::move(images)), n_images_(n_images) {}

  std::vector<std::vector<std::size_t>> run() {
    rgs_.assign(images_.size(), 0);
    if (images_.empty()) {
      found_.push_back({});
      return found_;
    }
    descend(0);
    return found_;
  }

 private:
  void descend(std::size_t i) {
    if (i == images_.size()) {
      if (maximal()) found_.push_back(rgs_);
      return;
    }
    std::size_t img = images_[i];
    for (std::size_t b = 0; b < used_.size(); ++b) {
      if (used_[b][img]) continue;
      used_[b][img] = 1;
      rgs_[i] = b;
      descend(i + 1);
      used_[b][img] = 0;
    }
    used_.emplace_back(n_images_, 0);
    used_.back()[img] = 1;
    rgs_[i] = used_.size() - 1;
    descend(i + 1);
    used_.pop_back();
  }

  // Valid partitions are closed under refinement, so a valid one is
  // coarsest iff no union of two of its blocks is still valid.
  bool maximal() const {
    for (std::size_t x = 0; x < used_.size(); ++x) {
      for (std::size_t y = x + 1; y < used_.size(); ++y) {
        bool overlap = false;
        for (std::size_t k = 0; k < n_images_ && !overlap; ++k) {
          overlap = used_[x][k] && used_[y][k];
        }
        if (!overlap) return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> images_;
  std::size_t n_images_;
  std::vector<std::size_t> rgs_;
  std::vector<std::vector<std::uint8_t>> used_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<Complement> minimal_complements(const Rel& f, std::size_t limit) {
  if (!is_function(f)) {
    throw std::invalid_argument("minimal_complements needs a function");
  }
  const std::size_t n = f.cols();
  if (n > limit) {
    throw SizeLimitExceeded("minimal_complements: source has " +
                            std::to_string(n) + " elements, limit is " +
                            std::to_string(limit));
  }
  std::vector<std::size_t> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = f.apply_index(j);

  auto signatures = ComplementSearch(images, f.rows()).run();
  std::sort(signatures.begin(), signatures.end());

  std::vector<Complement> out;
  out.reserve(signatures.size());
  for (auto& sig : signatures) {
    std::size_t n_blocks = 0;
    for (std::size_t b : sig) n_blocks = std::max(n_blocks, b + 1);
    std::vector<std::vector<std::size_t>> blocks(n_blocks);
    for (std::size_t j = 0; j < n; ++j) blocks[sig[j]].push_back(j);
    // Restricted growth means block order is already by least member.
    std::vector<Label> reps;
    for (const auto& blk : blocks) reps.push_back(f.src()[blk.front()]);
    Rel q(f.src(), FinBasis(reps));
    for (std::size_t j = 0; j < n; ++j) q.set(sig[j], j);
    out.push_back(Complement{std::move(sig), std::move(blocks), std::move(q)});
  }
  return out;
}

MonoidSpec::MonoidSpec(
    FinBasis carrier,
    const std::function<Label(const Label&, const Label&)>& op, Label unit)
    : carrier_(std::move(carrier)) {
  const std::size_t n = carrier_.size();
  unit_ = carrier_.index_of(unit);
  table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table_[x * n + y] = carrier_.index_of(op(carrier_[x], carrier_[y]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (op_index(x, unit_) != x || op_index(unit_, x) != x) {
      throw std::invalid_argument("monoid unit law fails at " +
                                  carrier_[x].str());
    }
    if (op_index(x, x) != unit_) {
      throw std::invalid_argument("monoid is not self-annihilating at " +
                                  carrier_[x].str());
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (op_index(op_index(x, y), z) != op_index(x, op_index(y, z))) {
          throw std::invalid_argument("monoid operation is not associative");
        }
      }
    }
  }
}

MonoidSpec MonoidSpec::xor_bits() {
  return MonoidSpec(
      FinBasis::bits(),
      [](const Label& x, const Label& y) {
        return Label::bit(x.as_bit() != y.as_bit());
      },
      Label::bit(false));
}

Label MonoidSpec::op(const Label& x, const Label& y) const {
  return carrier_[op_index(carrier_.index_of(x), carrier_.index_of(y))];
}

Rel MonoidSpec::as_rel() const {
  FinBasis sq = FinBasis::product(carrier_, carrier_);
  Rel out(sq, carrier_);
  const std::size_t n = carrier_.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out.set(op_index(x, y), x * n + y);
  }
  return out;
}

Rel u_construct(const Rel& f, const MonoidSpec& m) {
  if (!is_function(f)) throw std::invalid_argument("U needs a function");
  require_same(f.tgt(), m.carrier(), "U target");
  const FinBasis& a = f.src();
  const FinBasis& c = m.carrier();
  Rel theta_f = compose(m.as_rel(), product_map(f, Rel::identity(c)));
  return pair(fst(a, c), theta_f);
}

Rel parse_truth_table(std::string_view text) {
  std::vector<Label> srcs, tgts;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("truth table line " + std::to_string(line_no) +
                       ": missing '->'");
    }
    try {
      srcs.push_back(Label::parse(line.substr(0, arrow)));
      tgts.push_back(Label::parse(line.substr(arrow + 2)));
    } catch (const ParseError& e) {
      throw ParseError("truth table line " + std::to_string(line_no) + ": " +
                       e.what());
    }
    if (std::find(srcs.begin(), srcs.end() - 1, srcs.back()) !=
        srcs.end() - 1) {
      throw ParseError("truth table line " + std::to_string(line_no) +
                       ": duplicate source " + srcs.back().str());
    }
  }
  if (srcs.empty()) throw ParseError("truth table is empty");
  FinBasis src(srcs);
  FinBasis tgt;
  if (std::all_of(tgts.begin(), tgts.end(),
                  [](const Label& l) { return l.is_bit(); })) {
    tgt = FinBasis::bits();
  } else {
    std::vector<Label> seen;
    for (const auto& t : tgts) {
      if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
        seen.push_back(t);
      }
    }
    tgt = FinBasis(seen);
  }
  Rel out(src, tgt);
  for (std::size_t j = 0; j < srcs.size(); ++j) {
    out.set(tgt.index_of(tgts[j]), j);
  }
  return out;
}

}  // namespace quantakit
