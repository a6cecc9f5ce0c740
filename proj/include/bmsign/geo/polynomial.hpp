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

#pragma once

#include <bmsign/core.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace bmsign::geo {

/// Multivariate polynomial with rational coefficients in a fixed number of variables.
class Poly {
 public:
  using Exponents = std::vector<int>;

  explicit Poly(int nvars = 0) : n_(nvars) {}

  static Poly constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static Poly var(int nvars, int i) {
    Poly p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.terms_[e] = 1;
    return p;
  }

  static Poly monomial(const Exponents& e, const Rational& c) {
    Poly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  int nvars() const noexcept { return n_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  bool depends_on(int i) const {
    for (const auto& [e, c] : terms_)
      if (e.at(i) != 0) return true;
    return false;
  }

  friend Poly operator+(Poly a, const Poly& b) {
    a.check(b);
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly out(a.n_);
    for (const auto& [x, c] : a.terms_)
      for (const auto& [y, d] : b.terms_) {
        Exponents e(a.n_);
        for (int i = 0; i < a.n_; ++i) e[i] = x[i] + y[i];
        out.add(e, c * d);
      }
    return out;
  }
  friend Poly operator*(const Rational& s, Poly a) {
    if (s == 0) return Poly(a.n_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative(int i) const {
    Poly out(n_);
    for (const auto& [e, c] : terms_) {
      if (e.at(i) == 0) continue;
      Exponents f = e;
      --f[i];
      out.add(f, c * e[i]);
    }
    return out;
  }

  /// ∫₀¹ dx_i; the variable stays but no longer occurs.
  Poly integrate_unit(int i) const {
    Poly out(n_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f.at(i) = 0;
      out.add(f, c / (e[i] + 1));
    }
    return out;
  }

  /// Variable i ↦ where[i] in a ring of new_n variables; where[i] < 0 requires x_i to be absent.
  Poly reindex(const std::vector<int>& where, int new_n) const {
    Poly out(new_n);
    for (const auto& [e, c] : terms_) {
      Exponents f(new_n, 0);
      for (int i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        if (where.at(i) < 0) throw InvalidArgument("reindex drops a variable that occurs");
        f.at(where[i]) += e[i];
      }
      out.add(f, c);
    }
    return out;
  }

  /// x_i ↦ subs[i] (polynomials in new_n variables); entries for absent variables may be empty.
  Poly compose(const std::vector<Poly>& subs, int new_n) const {
    Poly out(new_n);
    std::vector<std::vector<Poly>> powers(n_);  // powers[i][k] = subs[i]^k
    auto power = [&](int i, int k) -> const Poly& {
      auto& p = powers[i];
      if (p.empty()) p.push_back(constant(new_n, 1));
      while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * subs.at(i));
      return p[k];
    };
    for (const auto& [e, c] : terms_) {
      Poly t = constant(new_n, c);
      for (int i = 0; i < n_; ++i)
        if (e[i]) t = t * power(i, e[i]);
      out += t;
    }
    return out;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= x.at(i);
      s += t;
    }
    return s;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (int i = 0; i < n_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      Rational a = abs(c);
      std::string part;
      if (mono.empty())
        part = a.get_str();
      else
        part = (a == 1 ? "" : a.get_str() + "*") + mono;
      if (out.empty())
        out = (c < 0 ? "-" : "") + part;
      else
        out += (c < 0 ? " - " : " + ") + part;
    }
    return out;
  }

 private:
  void check(const Poly& o) const {
    if (o.n_ != n_) throw InvalidArgument("polynomials live in different rings");
  }
  void add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  int n_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace bmsign::geo
