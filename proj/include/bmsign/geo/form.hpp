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

// Products of unit intervals and unit circles, and polynomial differential forms on them.
//
// A form is a sum of (coefficient polynomial) · dx_I with I a set of coordinate
// positions, stored as a bitmask and read in coordinate order. Coefficients may
// only involve interval coordinates.

#pragma once

#include <bmsign/geo/polynomial.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bmsign::geo {

enum class CoordKind { Interval, Circle };

struct Coord {
  std::string name;
  CoordKind kind = CoordKind::Interval;
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Ordered coordinates; the orientation is dx_1 ∧ … ∧ dx_n in this order.
struct Space {
  std::vector<Coord> coords;

  int dim() const noexcept { return static_cast<int>(coords.size()); }
  bool is_interval(int i) const { return coords.at(i).kind == CoordKind::Interval; }
  bool has_boundary() const {
    for (const auto& c : coords)
      if (c.kind == CoordKind::Interval) return true;
    return false;
  }
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& c : coords) out.push_back(c.name);
    return out;
  }
  std::string to_string() const {
    if (coords.empty()) return "pt";
    std::string out;
    for (const auto& c : coords) {
      if (!out.empty()) out += " x ";
      out += (c.kind == CoordKind::Interval ? "I_" : "S1_") + c.name;
    }
    return out;
  }
  friend bool operator==(const Space&, const Space&) = default;
};

inline Space interval(const std::string& name) { return {{{name, CoordKind::Interval}}}; }
inline Space circle(const std::string& name) { return {{{name, CoordKind::Circle}}}; }
inline Space point() { return {}; }
inline Space product(const Space& a, const Space& b) {
  Space s = a;
  s.coords.insert(s.coords.end(), b.coords.begin(), b.coords.end());
  return s;
}

using Mask = std::uint32_t;

namespace detail {

/// Sign parity of dx_x ∧ dx_y → dx_{x∪y} (pairs a ∈ x, b ∈ y with a > b); -1 if they overlap.
inline int merge_sign(Mask x, Mask y) {
  if (x & y) return -1;
  int n = 0;
  for (Mask r = y; r; r &= r - 1) {
    int b = std::countr_zero(r);
    n += std::popcount(x >> (b + 1));
  }
  return n & 1;
}

}  // namespace detail

class Form {
 public:
  explicit Form(Space space = {}) : space_(std::move(space)) {}

  static Form function(const Space& s, const Poly& f) {
    Form out(s);
    out.add_term(0, f);
    return out;
  }
  static Form constant(const Space& s, const Rational& c) { return function(s, Poly::constant(s.dim(), c)); }
  /// dx_i
  static Form coordinate(const Space& s, int i) {
    Form out(s);
    out.add_term(Mask{1} << i, Poly::constant(s.dim(), 1));
    return out;
  }

  const Space& space() const noexcept { return space_; }
  const std::map<Mask, Poly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Mask m, const Poly& p) {
    if (p.nvars() != space_.dim()) throw InvalidArgument("form coefficient has the wrong number of variables");
    if (space_.dim() < 32 && (m >> space_.dim()) != 0) throw InvalidArgument("form term uses a missing coordinate");
    for (int i = 0; i < space_.dim(); ++i)
      if (!space_.is_interval(i) && p.depends_on(i))
        throw InvalidArgument("coefficients must be constant in circle coordinates");
    if (p.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, p);
      return;
    }
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Common degree of all terms; nullopt for 0 or mixed degree.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, p] : terms_) {
      int k = std::popcount(m);
      if (d && *d != k) return std::nullopt;
      d = k;
    }
    return d;
  }

  /// Part of degree k.
  Form component(int k) const {
    Form out(space_);
    for (const auto& [m, p] : terms_)
      if (std::popcount(m) == k) out.terms_.emplace(m, p);
    return out;
  }

  friend Form operator+(Form a, const Form& b) {
    a.check(b);
    for (const auto& [m, p] : b.terms_) a.add_term(m, p);
    return a;
  }
  friend Form operator-(const Form& a) { return Rational(-1) * a; }
  friend Form operator-(const Form& a, const Form& b) { return a + (-b); }
  friend Form operator*(const Rational& s, const Form& a) {
    Form out(a.space_);
    for (const auto& [m, p] : a.terms_) out.add_term(m, s * p);
    return out;
  }
  Form& operator+=(const Form& o) { return *this = *this + o; }
  friend bool operator==(const Form&, const Form&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto names = space_.names();
    std::string out;
    for (const auto& [m, p] : terms_) {
      if (!out.empty()) out += " + ";
      std::string w;
      for (int i = 0; i < space_.dim(); ++i)
        if (m & (Mask{1} << i)) w += (w.empty() ? "d" : "^d") + names[i];
      out += "(" + p.to_string(names) + ")" + (w.empty() ? "" : "*" + w);
    }
    return out;
  }

  void check(const Form& o) const {
    if (!(o.space_ == space_)) throw InvalidArgument("forms live on different spaces");
  }

 private:
  Space space_;
  std::map<Mask, Poly> terms_;
};

inline Form wedge(const Form& a, const Form& b) {
  a.check(b);
  Form out(a.space());
  for (const auto& [x, p] : a.terms())
    for (const auto& [y, q] : b.terms()) {
      int s = detail::merge_sign(x, y);
      if (s < 0) continue;
      out.add_term(x | y, (s ? Rational(-1) : Rational(1)) * (p * q));
    }
  return out;
}

/// Exterior derivative; only interval coordinates contribute.
inline Form d(const Form& b) {
  Form out(b.space());
  for (const auto& [m, p] : b.terms())
    for (int i = 0; i < b.space().dim(); ++i) {
      if (!b.space().is_interval(i) || (m & (Mask{1} << i))) continue;
      Poly dp = p.derivative(i);
      if (dp.is_zero()) continue;
      int s = std::popcount(m & ((Mask{1} << i) - 1)) & 1;
      out.add_term(m | (Mask{1} << i), (s ? Rational(-1) : Rational(1)) * dp);
    }
  return out;
}

/// ∫ over the space of the top-degree part, oriented by coordinate order times `orientation`.
inline Rational integrate(const Form& b, int orientation = 1) {
  const int n = b.space().dim();
  const Mask top = n == 0 ? 0 : ((n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1));
  auto it = b.terms().find(top);
  if (it == b.terms().end()) return 0;
  Poly p = it->second;
  for (int i = 0; i < n; ++i)
    if (b.space().is_interval(i)) p = p.integrate_unit(i);
  Rational v = p.terms().empty() ? Rational(0) : p.terms().begin()->second;
  return orientation * v;
}

}  // namespace bmsign::geo
