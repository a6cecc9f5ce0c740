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

/// @file novikov.hpp
/// Exact arithmetic in the (energy-truncated) Novikov ring Λ₀.
///
/// Elements are finite sums `Σ aᵢ T^{λᵢ}` with rational coefficients and
/// non-negative rational exponents. The text format is
///
///     expr    := term (('+' | '-') term)*
///     term    := factor ('*' factor)*
///     factor  := '-' factor | atom ('^' power)?
///     atom    := number | 'T' | '(' expr ')'
///     number  := digits ('/' digits)?
///     power   := digits | '(' number ')'      // rational powers only on T
///
/// Canonical output lists terms by increasing exponent, e.g. `1 - T`,
/// `2*T^(1/2) + T^2`, `-1/3*T`. The empty sum prints as `0`.
#pragma once

#include <bmsign/core.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bmsign::novikov {

/// Strictly positive energy bound; truncation keeps exponents `< value`.
class EnergyCutoff {
 public:
  explicit EnergyCutoff(Rational value) : value_(std::move(value)) {
    if (value_ <= 0) throw InvalidArgument("energy cutoff must be positive, got " + to_string(value_));
  }
  const Rational& value() const noexcept { return value_; }

 private:
  Rational value_;
};

class NovikovElement {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  NovikovElement() = default;
  explicit NovikovElement(Rational constant) {
    if (constant != 0) terms_.push_back({Rational(0), std::move(constant)});
  }
  NovikovElement(long c) : NovikovElement(Rational(c)) {}  // NOLINT: integers embed implicitly

  static NovikovElement monomial(Rational coefficient, Rational exponent) {
    return from_terms({{std::move(exponent), std::move(coefficient)}});
  }
  static NovikovElement T(Rational exponent = 1) { return monomial(1, std::move(exponent)); }

  /// Merges like exponents and drops zero coefficients.
  static NovikovElement from_terms(std::vector<Term> terms) {
    for (const auto& t : terms)
      if (t.exponent < 0) throw InvalidArgument("negative Novikov exponent " + bmsign::to_string(t.exponent));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    NovikovElement out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent)
        out.terms_.back().coefficient += t.coefficient;
      else
        out.terms_.push_back(std::move(t));
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coefficient == 0; });
    return out;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Smallest exponent; `std::nullopt` stands for +∞ (the zero element).
  std::optional<Rational> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exponent;
  }

  NovikovElement truncated(const EnergyCutoff& cutoff) const {
    NovikovElement out;
    for (const auto& t : terms_) {
      if (t.exponent >= cutoff.value()) break;
      out.terms_.push_back(t);
    }
    return out;
  }

  /// Coefficient of T^exponent (zero if absent).
  Rational coefficient(const Rational& exponent) const {
    for (const auto& t : terms_)
      if (t.exponent == exponent) return t.coefficient;
    return 0;
  }

  friend NovikovElement operator+(const NovikovElement& a, const NovikovElement& b) {
    NovikovElement out;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exponent < i->exponent) {
        out.terms_.push_back(*j++);
      } else {
        Rational c = i->coefficient + j->coefficient;
        if (c != 0) out.terms_.push_back({i->exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend NovikovElement operator-(const NovikovElement& a) {
    NovikovElement out = a;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
  }
  friend NovikovElement operator-(const NovikovElement& a, const NovikovElement& b) { return a + (-b); }

  friend NovikovElement operator*(const NovikovElement& a, const NovikovElement& b) {
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) prod.push_back({x.exponent + y.exponent, x.coefficient * y.coefficient});
    return from_terms(std::move(prod));
  }

  NovikovElement& operator+=(const NovikovElement& o) { return *this = *this + o; }
  NovikovElement& operator-=(const NovikovElement& o) { return *this = *this - o; }
  NovikovElement& operator*=(const NovikovElement& o) { return *this = *this * o; }

  friend bool operator==(const NovikovElement&, const NovikovElement&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // strictly increasing exponents, nonzero coefficients
};

inline NovikovElement add(const NovikovElement& a, const NovikovElement& b) { return a + b; }
inline NovikovElement mul(const NovikovElement& a, const NovikovElement& b) { return a * b; }
inline NovikovElement truncate(const NovikovElement& a, const EnergyCutoff& e) { return a.truncated(e); }
inline std::optional<Rational> valuation(const NovikovElement& a) { return a.valuation(); }

inline std::string NovikovElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coefficient);
    bool negative = t.coefficient < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.exponent == 0) {
      out += bmsign::to_string(mag);
      continue;
    }
    if (mag != 1) out += bmsign::to_string(mag) + "*";
    out += "T";
    if (t.exponent != 1) {
      if (t.exponent.get_den() == 1)
        out += "^" + bmsign::to_string(t.exponent);
      else
        out += "^(" + bmsign::to_string(t.exponent) + ")";
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const NovikovElement& x) { return os << x.to_string(); }

namespace detail {

class NovikovParser {
 public:
  explicit NovikovParser(std::string_view text) : s_(text) {}

  NovikovElement parse() {
    NovikovElement v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "'+', '-', '*' or end of input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(pos_, std::string("'") + c + "'");
  }

  NovikovElement expr() {
    NovikovElement v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  NovikovElement term() {
    NovikovElement v = factor();
    while (eat('*')) v *= factor();
    return v;
  }
  NovikovElement factor() {
    if (eat('-')) return -factor();
    skip();
    if (pos_ < s_.size() && s_[pos_] == 'T') {
      ++pos_;
      if (!eat('^')) return NovikovElement::T();
      Rational e;
      if (eat('(')) {
        e = number();
        expect(')');
      } else {
        e = natural();
      }
      if (e < 0) throw ParseError(pos_, "non-negative exponent");
      return NovikovElement::T(e);
    }
    NovikovElement base;
    if (eat('(')) {
      base = expr();
      expect(')');
    } else {
      base = NovikovElement(number());
    }
    if (eat('^')) {
      Rational n = natural();
      NovikovElement acc(1L);
      for (unsigned long i = 0; i < n.get_num().get_ui(); ++i) acc *= base;
      return acc;
    }
    return base;
  }
  Rational natural() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "digits");
    return Rational(std::string(s_.substr(start, pos_ - start)));
  }
  Rational number() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Rational n = natural();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t at = pos_;
      Rational d = natural();
      if (d == 0) throw ParseError(at, "nonzero denominator");
      n /= d;
    }
    return neg ? Rational(-n) : n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and evaluates a Novikov expression (see the grammar above).
inline NovikovElement parse(std::string_view text) { return detail::NovikovParser(text).parse(); }

/// Sorted energy levels: every finite sum of generators that stays below a cutoff.
class GappedSpectrum {
 public:
  /// Adopts explicit levels; they must be non-negative and include 0.
  static GappedSpectrum from_levels(std::vector<Rational> levels) {
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty() || levels.front() != 0) throw InvalidArgument("spectrum must contain 0");
    GappedSpectrum s;
    s.levels_ = std::move(levels);
    for (const auto& l : s.levels_)
      if (l > 0) s.generators_.push_back(l);
    return s;
  }

  const std::vector<Rational>& levels() const noexcept { return levels_; }
  const std::vector<Rational>& generators() const noexcept { return generators_; }
  bool contains(const Rational& e) const { return std::binary_search(levels_.begin(), levels_.end(), e); }
  std::size_t size() const noexcept { return levels_.size(); }

 private:
  friend GappedSpectrum spectrum_closure(const std::vector<Rational>&, const EnergyCutoff&);
  std::vector<Rational> generators_;
  std::vector<Rational> levels_;
};

/// All sums (with repetition) of `generators` strictly below the cutoff, including 0.
inline GappedSpectrum spectrum_closure(const std::vector<Rational>& generators, const EnergyCutoff& cutoff) {
  for (const auto& g : generators)
    if (g <= 0) throw InvalidArgument("spectrum generators must be positive, got " + to_string(g));
  std::set<Rational> seen{Rational(0)};
  std::vector<Rational> frontier{Rational(0)};
  while (!frontier.empty()) {
    std::vector<Rational> next;
    for (const auto& base : frontier)
      for (const auto& g : generators) {
        Rational s = base + g;
        if (s < cutoff.value() && seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  GappedSpectrum out;
  out.generators_ = generators;
  std::sort(out.generators_.begin(), out.generators_.end());
  out.generators_.erase(std::unique(out.generators_.begin(), out.generators_.end()), out.generators_.end());
  out.levels_.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace bmsign::novikov
