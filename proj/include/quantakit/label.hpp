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

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quantakit {

/**
 * A basis label: an atom, a pair, a list, or a coproduct injection.
 *
 * Labels are immutable and cheap to copy. Identity, ordering and hashing all
 * go through the canonical text, which is also the syntax accepted by
 * Label::parse:
 *
 *     atom      0   1   *   q7
 *     pair      (a,b)
 *     list      []  [0,1,1]
 *     left      i1(x)
 *     right     i2(x)
 */
class Label {
 public:
  enum class Kind { atom, pair, list, left, right };

  /// The bit 0.
  Label();

  static Label atom(std::string name);
  static Label bit(bool b);
  static Label pair(Label first, Label second);
  static Label list(std::vector<Label> items);
  static Label left(Label inner);
  static Label right(Label inner);

  static Label parse(std::string_view text);

  Kind kind() const;
  const std::string& str() const;

  /// Atom name. Throws std::logic_error on a non-atom.
  const std::string& name() const;
  /// Atom "0"/"1" as a bool; throws if the label is not a bit.
  bool as_bit() const;
  bool is_bit() const;

  const Label& first() const;
  const Label& second() const;
  const std::vector<Label>& items() const;
  const Label& inner() const;

  friend bool operator==(const Label& a, const Label& b) {
    return a.str() == b.str();
  }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    return a.str() <=> b.str();
  }

 private:
  struct Node;
  explicit Label(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// An ordered set of distinct labels; the order fixes matrix indexing.
class FinBasis {
 public:
  FinBasis();
  explicit FinBasis(std::vector<Label> labels);

  static FinBasis bits();
  /// The one-point basis {*}.
  static FinBasis unit();
  /// Row-major product: left factor outer.
  static FinBasis product(const FinBasis& a, const FinBasis& b);
  /// All i1-tagged labels, then all i2-tagged labels.
  static FinBasis coproduct(const FinBasis& a, const FinBasis& b);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const Label& operator[](std::size_t i) const;
  const std::vector<Label>& labels() const;
  auto begin() const { return labels().begin(); }
  auto end() const { return labels().end(); }

  std::optional<std::size_t> find(const Label& l) const;
  bool contains(const Label& l) const { return find(l).has_value(); }
  /// Throws UnknownLabel when absent.
  std::size_t index_of(const Label& l) const;

  std::string str() const;

  friend bool operator==(const FinBasis& a, const FinBasis& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

}  // namespace quantakit

template <>
struct std::hash<quantakit::Label> {
  std::size_t operator()(const quantakit::Label& l) const noexcept {
    return std::hash<std::string>{}(l.str());
  }
};
