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

#include "quantakit/dump.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "quantakit/errors.hpp"

namespace quantakit {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

std::vector<std::pair<Label, Amp>> ordered(
    const AmpVec& v, const std::optional<FinBasis>& basis) {
  std::vector<std::pair<Label, Amp>> out;
  if (!basis) {
    for (const auto& kv : v) out.emplace_back(kv.first, kv.second);
    return out;
  }
  for (const auto& kv : v) {
    if (!basis->contains(kv.first)) {
      throw UnknownLabel("state label " + kv.first.str() + " not in basis");
    }
  }
  for (const Label& l : *basis) {
    Amp a = v.at(l);
    if (a != Amp(0.0, 0.0)) out.emplace_back(l, a);
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string format_amp(Amp a) {
  std::string im = fmt(a.imag());
  if (im.front() != '-') im = "+" + im;
  return fmt(a.real()) + im + "i";
}

Amp parse_amp(std::string_view text) {
  std::string s(text);
  if (s.size() < 2 || s.back() != 'i') {
    throw ParseError("amplitude must look like a+bi: " + s);
  }
  s.pop_back();
  // The imaginary sign is the last +/- not opening an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    throw ParseError("amplitude must look like a+bi: " + std::string(text));
  }
  try {
    std::size_t used_re = 0, used_im = 0;
    std::string re = s.substr(0, split), im = s.substr(split);
    double r = std::stod(re, &used_re);
    double m = std::stod(im, &used_im);
    if (used_re != re.size() || used_im != im.size()) throw std::exception();
    return {r, m};
  } catch (const std::exception&) {
    throw ParseError("bad amplitude: " + std::string(text));
  }
}

std::string dump_matrix(const CMatrix& m) {
  std::ostringstream out;
  for (std::size_t j = 0; j < m.src.size(); ++j) {
    if (j) out << ' ';
    out << m.src[j].str();
  }
  out << '\n';
  for (std::size_t i = 0; i < m.tgt.size(); ++i) {
    out << m.tgt[i].str() << ':';
    for (std::size_t j = 0; j < m.src.size(); ++j) {
      out << ' '
          << format_amp(m.m(static_cast<Eigen::Index>(i),
                            static_cast<Eigen::Index>(j)));
    }
    out << '\n';
  }
  return out.str();
}

std::string dump_matrix_json(const CMatrix& m) {
  nlohmann::ordered_json j;
  j["columns"] = nlohmann::json::array();
  for (const Label& l : m.src) j["columns"].push_back(l.str());
  j["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < m.tgt.size(); ++i) {
    nlohmann::ordered_json row;
    row["label"] = m.tgt[i].str();
    auto& entries = row["entries"] = nlohmann::json::array();
    for (std::size_t c = 0; c < m.src.size(); ++c) {
      Amp a = m.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
      entries.push_back({a.real() == 0.0 ? 0.0 : a.real(),
                         a.imag() == 0.0 ? 0.0 : a.imag()});
    }
    j["rows"].push_back(std::move(row));
  }
  return j.dump() + "\n";
}

CMatrix parse_matrix_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty matrix dump");
  std::vector<Label> cols;
  for (const auto& tok : split_ws(line)) cols.push_back(Label::parse(tok));
  std::vector<Label> rows;
  std::vector<std::vector<Amp>> values;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.rfind(':');
    if (colon == std::string::npos) throw ParseError("row without label");
    rows.push_back(Label::parse(line.substr(0, colon)));
    std::vector<Amp> row;
    for (const auto& tok : split_ws(line.substr(colon + 1))) {
      row.push_back(parse_amp(tok));
    }
    if (row.size() != cols.size()) {
      throw ParseError("row " + rows.back().str() + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols.size()));
    }
    values.push_back(std::move(row));
  }
  CMatrix m{FinBasis(cols), FinBasis(rows),
            Eigen::MatrixXcd(static_cast<Eigen::Index>(rows.size()),
                             static_cast<Eigen::Index>(cols.size()))};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          values[i][j];
    }
  }
  return m;
}

std::string dump_state(const AmpVec& v, const std::optional<FinBasis>& basis) {
  std::ostringstream out;
  for (const auto& [l, a] : ordered(v, basis)) {
    out << l.str() << ": " << format_amp(a) << '\n';
  }
  return out.str();
}

std::string dump_state_json(const AmpVec& v,
                            const std::optional<FinBasis>& basis) {
  nlohmann::ordered_json j = nlohmann::json::array();
  for (const auto& [l, a] : ordered(v, basis)) {
    nlohmann::ordered_json e;
    e["label"] = l.str();
    e["re"] = a.real() == 0.0 ? 0.0 : a.real();
    e["im"] = a.imag() == 0.0 ? 0.0 : a.imag();
    j.push_back(std::move(e));
  }
  return j.dump() + "\n";
}

}  // namespace quantakit
