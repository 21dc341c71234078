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

#include "quantakit/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "quantakit/errors.hpp"
#include "quantakit/quanta.hpp"

namespace quantakit {

Encoding::Encoding(FinBasis basis, int width)
    : basis_(std::move(basis)), width_(width) {}

Encoding Encoding::natural(const FinBasis& basis) {
  std::size_t n = basis.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw BasisMismatch("encoding needs a power-of-two basis, got " +
                        std::to_string(n) + " labels");
  }
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return Encoding(basis, k);
}

Encoding Encoding::pinned16() { return natural(pinned16_basis()); }

std::string Encoding::bits_of(std::size_t index) const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int q = 0; q < width_; ++q) {
    if ((index >> (width_ - 1 - q)) & 1) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

std::size_t Encoding::index_of_bits(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(width_)) {
    throw std::invalid_argument("expected " + std::to_string(width_) +
                                " bits, got \"" + std::string(bits) + "\"");
  }
  std::size_t i = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("not a bit string: " + std::string(bits));
    }
    i = (i << 1) | (ch == '1' ? 1u : 0u);
  }
  return i;
}

std::string Encoding::encode(const Label& l) const {
  return bits_of(basis_.index_of(l));
}

Label Encoding::decode(std::string_view bits) const {
  return basis_[index_of_bits(bits)];
}

std::string Gate::str() const {
  static const char* names[] = {"x", "cx", "ccx", "h", "t", "tdg", "mcx"};
  std::ostringstream out;
  out << names[static_cast<int>(kind)];
  for (std::size_t i = 0; i < controls.size(); ++i) {
    out << ' ' << (i < polarity.size() && !polarity[i] ? "!" : "")
        << controls[i];
  }
  out << " -> " << target;
  return out.str();
}

void Circuit::validate() const {
  const int n = total_qubits();
  for (const Gate& g : gates) {
    if (g.controls.size() != g.polarity.size()) {
      throw std::invalid_argument("polarity list does not match controls: " +
                                  g.str());
    }
    std::size_t expected = g.kind == GateKind::CX    ? 1
                           : g.kind == GateKind::CCX ? 2
                           : g.kind == GateKind::MCX ? g.controls.size()
                                                     : 0;
    if (g.controls.size() != expected) {
      throw std::invalid_argument("wrong control count: " + g.str());
    }
    std::vector<int> qs = g.controls;
    qs.push_back(g.target);
    for (int q : qs) {
      if (q < 0 || q >= n) {
        throw std::invalid_argument("qubit out of range: " + g.str());
      }
    }
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
      throw std::invalid_argument("repeated qubit: " + g.str());
    }
  }
}

std::vector<std::size_t> permutation_of(const CMatrix& m, double tol) {
  const auto rows = static_cast<std::size_t>(m.m.rows());
  const auto cols = static_cast<std::size_t>(m.m.cols());
  if (rows != cols) throw OutOfScope("synthesis needs a square matrix");
  std::vector<std::size_t> perm(cols);
  std::vector<bool> hit(rows, false);
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t one = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      Amp v = m.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (std::abs(v) <= tol) continue;
      if (std::abs(v - Amp(1.0, 0.0)) > tol || one != rows) {
        throw OutOfScope(
            "general unitary synthesis is out of scope: not a permutation "
            "matrix (column " + m.src[j].str() + ")");
      }
      one = i;
    }
    if (one == rows || hit[one]) {
      throw OutOfScope(
          "general unitary synthesis is out of scope: not a permutation "
          "matrix (column " + m.src[j].str() + ")");
    }
    hit[one] = true;
    perm[j] = one;
  }
  return perm;
}

namespace {

int bit_at(std::size_t x, int q, int width) {
  return static_cast<int>((x >> (width - 1 - q)) & 1);
}

// MCX that swaps the basis states u and u with qubit q flipped.
Gate adjacent_swap(std::size_t u, int q, int width) {
  std::vector<int> controls;
  std::vector<bool> polarity;
  for (int c = 0; c < width; ++c) {
    if (c == q) continue;
    controls.push_back(c);
    polarity.push_back(bit_at(u, c, width) == 1);
  }
  return Gate::mcx(std::move(controls), std::move(polarity), q);
}

// swap(a,b) as τ1 .. τr .. τ1 along a Gray path from a to b.
void transposition(std::size_t a, std::size_t b, int width,
                   std::vector<Gate>& out) {
  std::vector<Gate> chain;
  std::size_t cur = a;
  for (int q = 0; q < width; ++q) {
    if (bit_at(a, q, width) == bit_at(b, q, width)) continue;
    chain.push_back(adjacent_swap(cur, q, width));
    cur ^= std::size_t{1} << (width - 1 - q);
  }
  out.insert(out.end(), chain.begin(), chain.end());
  for (std::size_t i = chain.size() - 1; i-- > 0;) out.push_back(chain[i]);
}

std::vector<Gate> lower(const std::vector<Gate>& gates,
                        const std::vector<int>& ancillas) {
  std::vector<Gate> out;
  for (const Gate& g : gates) {
    if (g.kind != GateKind::MCX) {
      out.push_back(g);
      continue;
    }
    auto d = decompose_mcx(g.controls, g.polarity, g.target, ancillas);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

}  // namespace

Circuit synth_permutation(const CMatrix& m, const Encoding& enc) {
  if (!(m.src == enc.basis()) || !(m.tgt == enc.basis())) {
    throw BasisMismatch("matrix bases differ from the encoding basis");
  }
  std::vector<std::size_t> perm = permutation_of(m);
  const int k = enc.width();
  std::vector<Gate> abstract;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t c0 = 0; c0 < perm.size(); ++c0) {
    if (seen[c0]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = c0; !seen[x]; x = perm[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      transposition(cycle[0], cycle[i], k, abstract);
    }
  }
  abstract = peephole(abstract);

  Circuit c;
  c.data_qubits = k;
  c.ancilla_qubits = std::max(0, k - 3);
  std::vector<int> ancillas;
  for (int a = 0; a < c.ancilla_qubits; ++a) ancillas.push_back(k + a);
  c.gates = peephole(lower(abstract, ancillas));
  c.validate();
  return c;
}

std::vector<Gate> decompose_mcx(const std::vector<int>& controls,
                                const std::vector<bool>& polarity, int target,
                                const std::vector<int>& ancillas) {
  if (controls.size() != polarity.size()) {
    throw std::invalid_argument("polarity list does not match controls");
  }
  const std::size_t n = controls.size();
  if (n > 2 && ancillas.size() < n - 2) {
    throw InsufficientAncillas(
        std::to_string(n) + " controls need " + std::to_string(n - 2) +
        " ancillas, only " + std::to_string(ancillas.size()) + " available");
  }
  std::vector<Gate> flips;
  for (std::size_t i = 0; i < n; ++i) {
    if (!polarity[i]) flips.push_back(Gate::x(controls[i]));
  }
  std::vector<Gate> out = flips;
  if (n == 0) {
    out.push_back(Gate::x(target));
  } else if (n == 1) {
    out.push_back(Gate::cx(controls[0], target));
  } else if (n == 2) {
    out.push_back(Gate::ccx(controls[0], controls[1], target));
  } else {
    // V-chain: a0 = c0 & c1, a_i = c_{i+1} & a_{i-1}, target ^= c_{n-1} & a_{n-3}.
    std::vector<Gate> compute;
    compute.push_back(Gate::ccx(controls[0], controls[1], ancillas[0]));
    for (std::size_t i = 2; i + 1 < n; ++i) {
      compute.push_back(
          Gate::ccx(controls[i], ancillas[i - 2], ancillas[i - 1]));
    }
    out.insert(out.end(), compute.begin(), compute.end());
    out.push_back(Gate::ccx(controls[n - 1], ancillas[n - 3], target));
    out.insert(out.end(), compute.rbegin(), compute.rend());
  }
  out.insert(out.end(), flips.begin(), flips.end());
  return out;
}

namespace {

bool overlaps(const Gate& a, const Gate& b) {
  auto touches = [](const Gate& g, int q) {
    return g.target == q ||
           std::find(g.controls.begin(), g.controls.end(), q) !=
               g.controls.end();
  };
  if (touches(a, b.target)) return true;
  for (int q : b.controls) {
    if (touches(a, q)) return true;
  }
  return false;
}

// One sweep; a self-inverse gate cancels the nearest identical gate behind
// it when everything in between acts on other qubits.
bool cancel_pass(std::vector<Gate>& gates) {
  std::vector<Gate> out;
  bool changed = false;
  for (const Gate& g : gates) {
    bool cancelled = false;
    if (g.self_inverse()) {
      for (std::size_t i = out.size(); i-- > 0;) {
        if (out[i] == g) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          cancelled = true;
          break;
        }
        if (overlaps(out[i], g)) break;
      }
    }
    if (!cancelled) out.push_back(g);
    changed = changed || cancelled;
  }
  gates = std::move(out);
  return changed;
}

}  // namespace

std::vector<Gate> peephole(const std::vector<Gate>& gates) {
  std::vector<Gate> out = gates;
  while (cancel_pass(out)) {
  }
  return out;
}

namespace {

bool classical_only(const Circuit& c) {
  return std::all_of(c.gates.begin(), c.gates.end(), [](const Gate& g) {
    return g.kind == GateKind::X || g.kind == GateKind::CX ||
           g.kind == GateKind::CCX || g.kind == GateKind::MCX;
  });
}

bool controls_fire(const Gate& g, const std::vector<std::uint8_t>& s) {
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    if ((s[static_cast<std::size_t>(g.controls[i])] != 0) != g.polarity[i]) {
      return false;
    }
  }
  return true;
}

void check_input(const Circuit& c, std::string_view bits) {
  if (bits.size() != static_cast<std::size_t>(c.data_qubits) ||
      bits.find_first_not_of("01") != std::string_view::npos) {
    throw std::invalid_argument("input must be " +
                                std::to_string(c.data_qubits) +
                                " bits, got \"" + std::string(bits) + "\"");
  }
}

Label bits_label(const std::string& bits) {
  return bits == "0" || bits == "1" ? Label::bit(bits == "1")
                                    : Label::atom(bits);
}

}  // namespace

std::string simulate(const Circuit& c, std::string_view input) {
  c.validate();
  check_input(c, input);
  if (!classical_only(c)) {
    AmpVec out = simulate_state(c, AmpVec::ret(bits_label(std::string(input))));
    if (out.size() != 1 ||
        std::abs(std::abs(out.begin()->second) - 1.0) > kDefaultTol) {
      throw std::domain_error("circuit output is not a basis state");
    }
    return out.begin()->first.str();
  }
  std::vector<std::uint8_t> s(static_cast<std::size_t>(c.total_qubits()), 0);
  for (std::size_t q = 0; q < input.size(); ++q) s[q] = input[q] == '1';
  for (const Gate& g : c.gates) {
    if (controls_fire(g, s)) s[static_cast<std::size_t>(g.target)] ^= 1;
  }
  for (int a = c.data_qubits; a < c.total_qubits(); ++a) {
    if (s[static_cast<std::size_t>(a)]) {
      throw DirtyAncilla("ancilla " + std::to_string(a - c.data_qubits) +
                         " not restored on input " + std::string(input));
    }
  }
  std::string out(static_cast<std::size_t>(c.data_qubits), '0');
  for (int q = 0; q < c.data_qubits; ++q) {
    if (s[static_cast<std::size_t>(q)]) out[static_cast<std::size_t>(q)] = '1';
  }
  return out;
}

AmpVec simulate_state(const Circuit& c, const AmpVec& v) {
  c.validate();
  const int n = c.total_qubits();
  const int k = c.data_qubits;
  if (n > 24) throw SizeLimitExceeded("statevector limited to 24 qubits");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [label, a] : v) {
    check_input(c, label.str());
    std::size_t idx = 0;
    for (char ch : label.str()) idx = (idx << 1) | (ch == '1' ? 1u : 0u);
    psi(static_cast<Eigen::Index>(idx << (n - k))) += a;
  }
  auto mask = [n](int q) { return std::size_t{1} << (n - 1 - q); };
  const double h = 1.0 / std::numbers::sqrt2;
  const Amp phase = std::polar(1.0, std::numbers::pi / 4);
  for (const Gate& g : c.gates) {
    const std::size_t t = mask(g.target);
    switch (g.kind) {
      case GateKind::H:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & t) continue;
          auto i0 = static_cast<Eigen::Index>(i);
          auto i1 = static_cast<Eigen::Index>(i | t);
          Amp a0 = psi(i0), a1 = psi(i1);
          psi(i0) = h * (a0 + a1);
          psi(i1) = h * (a0 - a1);
        }
        break;
      case GateKind::T:
      case GateKind::Tdg: {
        Amp p = g.kind == GateKind::T ? phase : std::conj(phase);
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & t) psi(static_cast<Eigen::Index>(i)) *= p;
        }
        break;
      }
      default:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & t) continue;
          bool fire = true;
          for (std::size_t j = 0; j < g.controls.size() && fire; ++j) {
            fire = ((i & mask(g.controls[j])) != 0) == g.polarity[j];
          }
          if (fire) {
            std::swap(psi(static_cast<Eigen::Index>(i)),
                      psi(static_cast<Eigen::Index>(i | t)));
          }
        }
    }
  }
  const std::size_t anc_mask = (std::size_t{1} << (n - k)) - 1;
  AmpVec out;
  for (std::size_t i = 0; i < dim; ++i) {
    Amp a = psi(static_cast<Eigen::Index>(i));
    if (std::abs(a) < kPruneEps) continue;
    if (i & anc_mask) {
      if (std::abs(a) > kDefaultTol) {
        throw DirtyAncilla("ancillas not restored to |0>");
      }
      continue;
    }
    std::string bits(static_cast<std::size_t>(k), '0');
    for (int q = 0; q < k; ++q) {
      if (i & mask(q)) bits[static_cast<std::size_t>(q)] = '1';
    }
    out.accumulate(bits_label(bits), a);
  }
  return out.prune();
}

Circuit expand_toffoli(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::MCX) {
      throw std::logic_error("expand_toffoli: decompose MCX gates first");
    }
    if (g.kind != GateKind::CCX) {
      out.gates.push_back(g);
      continue;
    }
    const int a = g.controls[0], b = g.controls[1], t = g.target;
    out.gates.insert(out.gates.end(),
                     {Gate::h(t), Gate::cx(b, t), Gate::tdg(t), Gate::cx(a, t),
                      Gate::t(t), Gate::cx(b, t), Gate::tdg(t), Gate::cx(a, t),
                      Gate::t(b), Gate::t(t), Gate::h(t), Gate::cx(a, b),
                      Gate::t(a), Gate::tdg(b), Gate::cx(a, b)});
  }
  return out;
}

Metrics metrics(const Circuit& c) {
  Metrics m;
  std::vector<std::size_t> front(static_cast<std::size_t>(c.total_qubits()), 0);
  for (const Gate& g : c.gates) {
    ++m.size;
    if (g.kind == GateKind::CX) ++m.cx;
    std::vector<int> qs = g.controls;
    qs.push_back(g.target);
    std::size_t level = 0;
    for (int q : qs) level = std::max(level, front[static_cast<std::size_t>(q)]);
    ++level;
    for (int q : qs) front[static_cast<std::size_t>(q)] = level;
    m.depth = std::max(m.depth, level);
  }
  return m;
}

std::string metrics_json(const Metrics& m) {
  return "{\"size\":" + std::to_string(m.size) +
         ",\"cx\":" + std::to_string(m.cx) +
         ",\"depth\":" + std::to_string(m.depth) + "}";
}

}  // namespace quantakit
