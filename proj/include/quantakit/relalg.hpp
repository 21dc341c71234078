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
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "quantakit/label.hpp"

namespace quantakit {

/**
 * A typed Boolean relation R : src -> tgt, stored as a dense |tgt| x |src|
 * matrix. Entry (b, a) is set iff b R a.
 */
class Rel {
 public:
  /// The empty relation.
  Rel(FinBasis src, FinBasis tgt);
  /// Row-major entries, |tgt| rows by |src| columns.
  Rel(FinBasis src, FinBasis tgt, std::vector<std::uint8_t> entries);

  static Rel identity(const FinBasis& a);
  static Rel from_function(const FinBasis& src, const FinBasis& tgt,
                           const std::function<Label(const Label&)>& f);
  static Rel from_predicate(
      const FinBasis& src, const FinBasis& tgt,
      const std::function<bool(const Label& b, const Label& a)>& p);
  /// The constant function to the one-point basis.
  static Rel bang(const FinBasis& a);

  const FinBasis& src() const { return src_; }
  const FinBasis& tgt() const { return tgt_; }
  std::size_t rows() const { return tgt_.size(); }
  std::size_t cols() const { return src_.size(); }

  bool at(std::size_t row, std::size_t col) const {
    return entries_[row * cols() + col] != 0;
  }
  void set(std::size_t row, std::size_t col, bool v = true) {
    entries_[row * cols() + col] = v ? 1 : 0;
  }
  bool relates(const Label& b, const Label& a) const;
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  /// Image of a source element under a function; throws unless exactly one
  /// target is related.
  Label apply(const Label& a) const;
  std::size_t apply_index(std::size_t col) const;

  /// Rows of 0/1 separated by spaces, optionally prefixed by row labels.
  std::string str(bool with_labels = false) const;

  friend bool operator==(const Rel& a, const Rel& b);

 private:
  FinBasis src_;
  FinBasis tgt_;
  std::vector<std::uint8_t> entries_;
};

/// r . s; requires s.tgt == r.src.
Rel compose(const Rel& r, const Rel& s);
Rel converse(const Rel& r);
/// r° . r
Rel kernel(const Rel& r);
/// r . r°
Rel image(const Rel& r);
Rel meet(const Rel& r, const Rel& s);
Rel join(const Rel& r, const Rel& s);
/// r ⊆ s
bool includes(const Rel& s, const Rel& r);

/// The split <r,s> : src -> r.tgt x s.tgt.
Rel pair(const Rel& r, const Rel& s);
/// The junc [r|s] : r.src + s.src -> tgt.
Rel either(const Rel& r, const Rel& s);
Rel sum(const Rel& r, const Rel& s);
Rel product_map(const Rel& r, const Rel& s);
Rel inj1(const FinBasis& a, const FinBasis& b);
Rel inj2(const FinBasis& a, const FinBasis& b);
Rel fst(const FinBasis& a, const FinBasis& b);
Rel snd(const FinBasis& a, const FinBasis& b);
/// [<false,id>|<true,id>] : A + A -> B x A.
Rel gamma(const FinBasis& a);

bool is_injective(const Rel& r);
bool is_simple(const Rel& r);
bool is_entire(const Rel& r);
bool is_surjective(const Rel& r);
bool is_function(const Rel& r);
bool is_bijection(const Rel& r);

/// r <= s in the injectivity preorder: ker s ⊆ ker r.
bool leq_injectivity(const Rel& r, const Rel& s);
bool is_difunctional(const Rel& r);

struct Complement {
  /// Block index of every source element, in restricted-growth form.
  std::vector<std::size_t> signature;
  std::vector<std::vector<std::size_t>> blocks;
  /// src -> representatives, each element sent to the least index of its
  /// block.
  Rel quotient;
};

inline constexpr std::size_t kComplementLimit = 12;

/// All coarsest partitions E of f.src with E ∩ ker f = id, ordered by
/// signature. Throws SizeLimitExceeded above `limit` source elements.
std::vector<Complement> minimal_complements(
    const Rel& f, std::size_t limit = kComplementLimit);

/// A finite monoid with x·x = unit for every x.
class MonoidSpec {
 public:
  MonoidSpec(FinBasis carrier,
             const std::function<Label(const Label&, const Label&)>& op,
             Label unit);

  static MonoidSpec xor_bits();

  const FinBasis& carrier() const { return carrier_; }
  const Label& unit() const { return carrier_[unit_]; }
  std::size_t op_index(std::size_t x, std::size_t y) const {
    return table_[x * carrier_.size() + y];
  }
  Label op(const Label& x, const Label& y) const;
  /// The uncurried operation as a function carrier x carrier -> carrier.
  Rel as_rel() const;

 private:
  FinBasis carrier_;
  std::vector<std::size_t> table_;
  std::size_t unit_;
};

/// <fst, θ . (f x id)> : A x M -> A x M.
Rel u_construct(const Rel& f, const MonoidSpec& m);

/// Parses `label -> label` lines ('#' starts a comment). Sources keep file
/// order; targets are the bit basis when every target is a bit, otherwise
/// first-appearance order.
Rel parse_truth_table(std::string_view text);

}  // namespace quantakit
