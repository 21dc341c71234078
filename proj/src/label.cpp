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

#include "quantakit/label.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "quantakit/errors.hpp"

namespace quantakit {

struct Label::Node {
  Kind kind;
  std::string text;
  std::vector<Label> children;
};

namespace {

bool is_reserved(char c) {
  return c == '(' || c == ')' || c == '[' || c == ']' || c == ',' ||
         c == ':' || std::isspace(static_cast<unsigned char>(c));
}


}  // namespace

Label::Label() : Label(bit(false)) {}

Label::Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Label Label::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom label");
  for (char c : name) {
    if (is_reserved(c)) {
      throw std::invalid_argument("atom label contains reserved character: " +
                                  name);
    }
  }
  if (name == "i1" || name == "i2") {
    throw std::invalid_argument("atom label clashes with injection tag");
  }
  return Label(std::make_shared<const Node>(
      Node{Kind::atom, std::move(name), {}}));
}

Label Label::bit(bool b) {
  static const Label zero(
      std::make_shared<const Node>(Node{Kind::atom, "0", {}}));
  static const Label one(
      std::make_shared<const Node>(Node{Kind::atom, "1", {}}));
  return b ? one : zero;
}

Label Label::pair(Label first, Label second) {
  std::string text = "(" + first.str() + "," + second.str() + ")";
  return Label(std::make_shared<const Node>(
      Node{Kind::pair, std::move(text), {std::move(first), std::move(second)}}));
}

Label Label::list(std::vector<Label> items) {
  std::string text = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) text += ',';
    text += items[i].str();
  }
  text += ']';
  return Label(std::make_shared<const Node>(
      Node{Kind::list, std::move(text), std::move(items)}));
}

Label Label::left(Label inner) {
  std::string text = "i1(" + inner.str() + ")";
  return Label(std::make_shared<const Node>(
      Node{Kind::left, std::move(text), {std::move(inner)}}));
}

Label Label::right(Label inner) {
  std::string text = "i2(" + inner.str() + ")";
  return Label(std::make_shared<const Node>(
      Node{Kind::right, std::move(text), {std::move(inner)}}));
}

Label::Kind Label::kind() const { return node_->kind; }
const std::string& Label::str() const { return node_->text; }

const std::string& Label::name() const {
  if (kind() != Kind::atom) throw std::logic_error("not an atom: " + str());
  return node_->text;
}

bool Label::is_bit() const {
  return kind() == Kind::atom && (str() == "0" || str() == "1");
}

bool Label::as_bit() const {
  if (!is_bit()) throw std::logic_error("not a bit: " + str());
  return str() == "1";
}

const Label& Label::first() const {
  if (kind() != Kind::pair) throw std::logic_error("not a pair: " + str());
  return node_->children[0];
}

const Label& Label::second() const {
  if (kind() != Kind::pair) throw std::logic_error("not a pair: " + str());
  return node_->children[1];
}

const std::vector<Label>& Label::items() const {
  if (kind() != Kind::list) throw std::logic_error("not a list: " + str());
  return node_->children;
}

const Label& Label::inner() const {
  if (kind() != Kind::left && kind() != Kind::right) {
    throw std::logic_error("not an injection: " + str());
  }
  return node_->children[0];
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Label parse_all() {
    Label l = parse_label();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("label parse error at offset " + std::to_string(pos_) +
                     ": " + what + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Label parse_label() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Label a = parse_label();
      expect(',');
      Label b = parse_label();
      expect(')');
      return Label::pair(std::move(a), std::move(b));
    }
    if (c == '[') {
      ++pos_;
      std::vector<Label> items;
      if (peek() == ']') {
        ++pos_;
        return Label::list({});
      }
      for (;;) {
        items.push_back(parse_label());
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        return Label::list(std::move(items));
      }
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_reserved(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a label");
    std::string word(text_.substr(start, pos_ - start));
    if ((word == "i1" || word == "i2") && pos_ < text_.size() &&
        text_[pos_] == '(') {
      ++pos_;
      Label inner = parse_label();
      expect(')');
      return word == "i1" ? Label::left(std::move(inner))
                          : Label::right(std::move(inner));
    }
    if (word == "0" || word == "1") return Label::bit(word == "1");
    return Label::atom(std::move(word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Label Label::parse(std::string_view text) { return Parser(text).parse_all(); }

struct FinBasis::Data {
  std::vector<Label> labels;
  std::unordered_map<std::string, std::size_t> index;
};

FinBasis::FinBasis() : FinBasis(std::vector<Label>{}) {}

FinBasis::FinBasis(std::vector<Label> labels) {
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->index.emplace(labels[i].str(), i).second) {
      throw std::invalid_argument("duplicate basis label: " + labels[i].str());
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

FinBasis FinBasis::bits() {
  static const FinBasis b({Label::bit(false), Label::bit(true)});
  return b;
}

FinBasis FinBasis::unit() {
  static const FinBasis u({Label::atom("*")});
  return u;
}

FinBasis FinBasis::product(const FinBasis& a, const FinBasis& b) {
  std::vector<Label> labels;
  labels.reserve(a.size() * b.size());
  for (const Label& x : a) {
    for (const Label& y : b) labels.push_back(Label::pair(x, y));
  }
  return FinBasis(std::move(labels));
}

FinBasis FinBasis::coproduct(const FinBasis& a, const FinBasis& b) {
  std::vector<Label> labels;
  labels.reserve(a.size() + b.size());
  for (const Label& x : a) labels.push_back(Label::left(x));
  for (const Label& y : b) labels.push_back(Label::right(y));
  return FinBasis(std::move(labels));
}

std::size_t FinBasis::size() const { return data_->labels.size(); }

const Label& FinBasis::operator[](std::size_t i) const {
  return data_->labels.at(i);
}

const std::vector<Label>& FinBasis::labels() const { return data_->labels; }

std::optional<std::size_t> FinBasis::find(const Label& l) const {
  auto it = data_->index.find(l.str());
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinBasis::index_of(const Label& l) const {
  auto i = find(l);
  if (!i) throw UnknownLabel("label " + l.str() + " not in basis " + str());
  return *i;
}

std::string FinBasis::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    if (i == 8 && size() > 10) {
      out += "... (" + std::to_string(size()) + " labels)";
      break;
    }
    out += data_->labels[i].str();
  }
  return out + "}";
}

bool operator==(const FinBasis& a, const FinBasis& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels;
}

}  // namespace quantakit
