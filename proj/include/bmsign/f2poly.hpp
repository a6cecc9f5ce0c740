// Copyright 2026 The bmsign Authors
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

/// @file f2poly.hpp
/// Zhegalkin (algebraic normal form) polynomials over GF(2) in named variables.
///
/// A polynomial is a set of monomials; a monomial is a sorted set of variable
/// names, the empty monomial being the constant 1. Since every variable stands
/// for an integer parity, x·x = x is built into the representation.
#pragma once

#include <bmsign/core.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace bmsign::f2 {

using Assignment = std::map<std::string, Parity>;

class F2Poly {
 public:
  using Monomial = std::vector<std::string>;  // sorted, no repeats

  F2Poly() = default;

  static F2Poly zero() { return {}; }
  static F2Poly one() { return constant(1); }
  static F2Poly constant(long long c) {
    F2Poly p;
    if (parity(c)) p.monos_.insert(Monomial{});
    return p;
  }
  static F2Poly var(const std::string& name) {
    if (name.empty()) throw InvalidArgument("empty variable name");
    F2Poly p;
    p.monos_.insert(Monomial{name});
    return p;
  }
  /// Builds a polynomial from monomials, cancelling repeated ones in pairs.
  static F2Poly from_monomials(const std::vector<Monomial>& monos) {
    F2Poly p;
    for (auto m : monos) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      p.toggle(std::move(m));
    }
    return p;
  }

  const std::set<Monomial>& monomials() const noexcept { return monos_; }
  bool is_zero() const noexcept { return monos_.empty(); }
  std::size_t size() const noexcept { return monos_.size(); }

  std::set<std::string> variables() const {
    std::set<std::string> vs;
    for (const auto& m : monos_) vs.insert(m.begin(), m.end());
    return vs;
  }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& m : monos_) d = std::max(d, m.size());
    return d;
  }

  /// Throws InvalidArgument if a variable of the polynomial is unassigned.
  Parity evaluate(const Assignment& a) const {
    Parity acc = 0;
    for (const auto& m : monos_) {
      Parity v = 1;
      for (const auto& x : m) {
        auto it = a.find(x);
        if (it == a.end()) throw InvalidArgument("evaluate: variable '" + x + "' is not assigned");
        v &= parity(it->second);
      }
      acc ^= v;
    }
    return acc;
  }

  friend F2Poly operator+(const F2Poly& a, const F2Poly& b) {
    F2Poly out = a;
    for (const auto& m : b.monos_) out.toggle(m);
    return out;
  }
  friend F2Poly operator-(const F2Poly& a, const F2Poly& b) { return a + b; }
  friend F2Poly operator-(const F2Poly& a) { return a; }

  friend F2Poly operator*(const F2Poly& a, const F2Poly& b) {
    F2Poly out;
    Monomial buf;
    for (const auto& x : a.monos_)
      for (const auto& y : b.monos_) {
        buf.clear();
        std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(buf));
        out.toggle(buf);
      }
    return out;
  }

  F2Poly& operator+=(const F2Poly& o) {
    for (const auto& m : o.monos_) toggle(m);
    return *this;
  }
  F2Poly& operator*=(const F2Poly& o) { return *this = *this * o; }

  friend bool operator==(const F2Poly&, const F2Poly&) = default;

  /// Monomials by increasing degree, ties lexicographic: `1 + m1 + d1*d2`.
  std::string to_string() const {
    if (monos_.empty()) return "0";
    std::vector<const Monomial*> order;
    for (const auto& m : monos_) order.push_back(&m);
    std::stable_sort(order.begin(), order.end(),
                     [](const Monomial* x, const Monomial* y) { return x->size() < y->size(); });
    std::string out;
    for (const Monomial* m : order) {
      if (!out.empty()) out += " + ";
      if (m->empty()) {
        out += "1";
        continue;
      }
      for (std::size_t i = 0; i < m->size(); ++i) out += (i ? "*" : "") + (*m)[i];
    }
    return out;
  }

 private:
  void toggle(const Monomial& m) {
    auto [it, inserted] = monos_.insert(m);
    if (!inserted) monos_.erase(it);
  }

  std::set<Monomial> monos_;
};

inline std::ostream& operator<<(std::ostream& os, const F2Poly& p) { return os << p.to_string(); }

/// Bitmask form of a polynomial over a fixed variable order, for fast truth tables.
/// Bit i of an assignment word is the value of `vars[i]`.
class CompiledPoly {
 public:
  CompiledPoly(const F2Poly& p, std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.size() > 63) throw InvalidArgument("too many variables for a compiled polynomial");
    std::map<std::string, int> pos;
    for (std::size_t i = 0; i < vars_.size(); ++i) pos[vars_[i]] = static_cast<int>(i);
    for (const auto& m : p.monomials()) {
      std::uint64_t mask = 0;
      for (const auto& x : m) {
        auto it = pos.find(x);
        if (it == pos.end()) throw InvalidArgument("compile: variable '" + x + "' missing from order");
        mask |= std::uint64_t{1} << it->second;
      }
      masks_.push_back(mask);
    }
  }
  explicit CompiledPoly(const F2Poly& p) : CompiledPoly(p, sorted_vars(p)) {}

  Parity operator()(std::uint64_t word) const noexcept {
    Parity acc = 0;
    for (auto m : masks_) acc ^= static_cast<Parity>((m & ~word) == 0);
    return acc;
  }
  const std::vector<std::string>& vars() const noexcept { return vars_; }

  Assignment decode(std::uint64_t word) const {
    Assignment a;
    for (std::size_t i = 0; i < vars_.size(); ++i) a[vars_[i]] = static_cast<Parity>((word >> i) & 1U);
    return a;
  }

 private:
  static std::vector<std::string> sorted_vars(const F2Poly& p) {
    auto s = p.variables();
    return {s.begin(), s.end()};
  }
  std::vector<std::string> vars_;
  std::vector<std::uint64_t> masks_;
};

/// Largest variable count searched exhaustively for a witness.
inline constexpr std::size_t kExhaustiveWitnessVars = 20;

struct Equivalence {
  bool equivalent = true;
  std::optional<Assignment> witness;  // an assignment where p and q differ
};

/// Assignment with p(σ) = 1 for nonzero p. Up to 20 variables it is the first hit
/// enumerating words 0, 1, 2, ... with bit i the i-th variable in name order;
/// above that, the support of a minimal-degree monomial.
inline std::optional<Assignment> find_witness(const F2Poly& p) {
  if (p.is_zero()) return std::nullopt;
  CompiledPoly c(p);
  if (c.vars().size() <= kExhaustiveWitnessVars) {
    const std::uint64_t n = std::uint64_t{1} << c.vars().size();
    for (std::uint64_t w = 0; w < n; ++w)
      if (c(w)) return c.decode(w);
  }
  // A minimal monomial is the only monomial supported inside its own variable set.
  const F2Poly::Monomial* best = nullptr;
  for (const auto& m : p.monomials())
    if (!best || m.size() < best->size()) best = &m;
  Assignment a;
  for (const auto& v : c.vars()) a[v] = 0;
  for (const auto& v : *best) a[v] = 1;
  return a;
}

inline Equivalence anf_equivalent(const F2Poly& p, const F2Poly& q) {
  F2Poly r = p + q;
  if (r.is_zero()) return {};
  return {false, find_witness(r)};
}

/// Exhaustive truth-table comparison over the union of variables; independent of ANF canonicity.
inline bool truth_table_equal(const F2Poly& p, const F2Poly& q) {
  auto vs = p.variables();
  auto vq = q.variables();
  vs.insert(vq.begin(), vq.end());
  std::vector<std::string> order(vs.begin(), vs.end());
  if (order.size() > 30) throw InvalidArgument("truth table too large");
  CompiledPoly cp(p, order), cq(q, order);
  const std::uint64_t n = std::uint64_t{1} << order.size();
  for (std::uint64_t w = 0; w < n; ++w)
    if (cp(w) != cq(w)) return false;
  return true;
}

}  // namespace bmsign::f2
