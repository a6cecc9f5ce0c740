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

/// @file sign_expr.hpp
/// A small language for integer sign exponents and its elaboration to ANF.
///
///     expr    := term (('+' | '-') term)*
///     term    := unary ('*' unary)*
///     unary   := '-' unary | primary
///     primary := integer
///              | 'Sum' '(' ident '=' expr '..' expr ',' expr ')'
///              | ident ('[' expr ']')?
///              | '(' expr ')'
///     ident   := letter (letter | digit)* ('_' (letter | digit)+)*
///
/// `name_i` and `name[e]` are indexed variables: with i bound to 3 both
/// elaborate to the plain variable `name3`. An identifier is split at its last
/// underscore. Sum bounds and indices must evaluate to concrete integers.
#pragma once

#include <bmsign/core.hpp>
#include <bmsign/f2poly.hpp>

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmsign::f2 {

enum class ExprKind { Int, Var, Indexed, Add, Sub, Mul, Neg, Sum };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node. Indexed: name = base, kids = {index}. Sum: name = bound
/// variable, kids = {lo, hi, body}. Binary nodes: kids = {lhs, rhs}.
struct Expr {
  ExprKind kind = ExprKind::Int;
  long long value = 0;
  std::string name;
  std::vector<ExprPtr> kids;
};

namespace build {
inline ExprPtr integer(long long v) { return std::make_shared<const Expr>(Expr{ExprKind::Int, v, {}, {}}); }
inline ExprPtr var(std::string n) { return std::make_shared<const Expr>(Expr{ExprKind::Var, 0, std::move(n), {}}); }
inline ExprPtr indexed(std::string base, ExprPtr idx) {
  return std::make_shared<const Expr>(Expr{ExprKind::Indexed, 0, std::move(base), {std::move(idx)}});
}
inline ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{k, 0, {}, {std::move(a), std::move(b)}});
}
inline ExprPtr neg(ExprPtr a) { return std::make_shared<const Expr>(Expr{ExprKind::Neg, 0, {}, {std::move(a)}}); }
inline ExprPtr sum(std::string v, ExprPtr lo, ExprPtr hi, ExprPtr body) {
  return std::make_shared<const Expr>(
      Expr{ExprKind::Sum, 0, std::move(v), {std::move(lo), std::move(hi), std::move(body)}});
}
}  // namespace build

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class SignExprParser {
 public:
  explicit SignExprParser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "operator or end of input");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool eat(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) throw ParseError(pos_, "'" + std::string(tok) + "'");
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (eat("+"))
        e = build::binary(ExprKind::Add, e, term());
      else if (peek("-"))
        ++pos_, e = build::binary(ExprKind::Sub, e, term());
      else
        return e;
    }
  }
  ExprPtr term() {
    ExprPtr e = unary();
    while (eat("*")) e = build::binary(ExprKind::Mul, e, unary());
    return e;
  }
  ExprPtr unary() {
    if (eat("-")) return build::neg(unary());
    return primary();
  }
  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "operand");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return build::integer(integer());
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (!ident_start(c)) throw ParseError(pos_, "operand");
    std::string id = ident();
    if (id == "Sum" && peek("(")) {
      expect("(");
      skip();
      std::size_t at = pos_;
      if (at >= s_.size() || !ident_start(s_[at])) throw ParseError(at, "summation variable");
      std::string v = ident();
      if (v.find('_') != std::string::npos) throw ParseError(at, "plain summation variable");
      expect("=");
      ExprPtr lo = expr();
      expect("..");
      ExprPtr hi = expr();
      expect(",");
      ExprPtr body = expr();
      expect(")");
      return build::sum(v, lo, hi, body);
    }
    if (eat("[")) {
      ExprPtr idx = expr();
      expect("]");
      return build::indexed(id, idx);
    }
    auto us = id.rfind('_');
    if (us == std::string::npos) return build::var(id);
    std::string base = id.substr(0, us), idx = id.substr(us + 1);
    if (base.empty() || idx.empty()) throw ParseError(pos_, "index after '_'");
    bool numeric = std::all_of(idx.begin(), idx.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    return build::indexed(base, numeric ? build::integer(std::stoll(idx)) : build::var(idx));
  }
  long long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ - start > 15) throw ParseError(start, "integer literal below 10^15");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Int:
      return e.value < 0 ? 3 : 4;
    default:
      return 4;
  }
}

inline std::string print(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case ExprKind::Int:
      s = std::to_string(e.value);
      break;
    case ExprKind::Var:
      s = e.name;
      break;
    case ExprKind::Indexed: {
      const Expr& i = *e.kids[0];
      if (i.kind == ExprKind::Var || (i.kind == ExprKind::Int && i.value >= 0))
        s = e.name + "_" + print(i, 4);
      else
        s = e.name + "[" + print(i, 0) + "]";
      break;
    }
    case ExprKind::Add:
    case ExprKind::Sub:
      s = print(*e.kids[0], 1) + (e.kind == ExprKind::Add ? " + " : " - ") + print(*e.kids[1], 2);
      break;
    case ExprKind::Mul:
      s = print(*e.kids[0], 2) + "*" + print(*e.kids[1], 3);
      break;
    case ExprKind::Neg:
      s = "-" + print(*e.kids[0], 3);
      break;
    case ExprKind::Sum:
      s = "Sum(" + e.name + "=" + print(*e.kids[0], 0) + ".." + print(*e.kids[1], 0) + ", " + print(*e.kids[2], 0) + ")";
      break;
  }
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace detail

/// Throws ParseError carrying the byte offset and the expected token.
inline ExprPtr parse_sign_expr(std::string_view text) { return detail::SignExprParser(text).parse(); }

/// Minimal-parenthesis rendering; parse(print(e)) prints identically.
inline std::string print(const Expr& e) { return detail::print(e, 0); }

/// Tree rendering, e.g. `Mul(Sub(Var k2, 1), Sub(Var k1, Var j))`.
inline std::string structure(const Expr& e) {
  auto kids = [&](const char* head) {
    std::string s = std::string(head) + "(";
    for (std::size_t i = 0; i < e.kids.size(); ++i) s += (i ? ", " : "") + structure(*e.kids[i]);
    return s + ")";
  };
  switch (e.kind) {
    case ExprKind::Int:
      return std::to_string(e.value);
    case ExprKind::Var:
      return "Var " + e.name;
    case ExprKind::Indexed:
      return "Indexed(" + e.name + ", " + structure(*e.kids[0]) + ")";
    case ExprKind::Add:
      return kids("Add");
    case ExprKind::Sub:
      return kids("Sub");
    case ExprKind::Mul:
      return kids("Mul");
    case ExprKind::Neg:
      return kids("Neg");
    case ExprKind::Sum:
      return "Sum(" + e.name + ", " + structure(*e.kids[0]) + ", " + structure(*e.kids[1]) + ", " +
             structure(*e.kids[2]) + ")";
  }
  return {};
}

/// Values for free names. Integers feed indices and Sum bounds as well as
/// arithmetic; polynomials substitute whole sub-formulas.
struct Bindings {
  std::map<std::string, long long> ints;
  std::map<std::string, F2Poly> polys;
  bool free_symbolic = true;  // unbound names become ANF variables instead of errors
};

namespace detail {

struct Scope {
  const Bindings& b;
  std::vector<std::pair<std::string, long long>> locals;

  const long long* find_int(const std::string& n) const {
    for (auto it = locals.rbegin(); it != locals.rend(); ++it)
      if (it->first == n) return &it->second;
    auto it = b.ints.find(n);
    return it == b.ints.end() ? nullptr : &it->second;
  }
};

inline long long eval_int(const Expr& e, const Scope& sc);

inline std::string indexed_name(const Expr& e, const Scope& sc) {
  return e.name + std::to_string(eval_int(*e.kids[0], sc));
}

inline long long eval_int(const Expr& e, const Scope& sc) {
  switch (e.kind) {
    case ExprKind::Int:
      return e.value;
    case ExprKind::Var:
    case ExprKind::Indexed: {
      std::string n = e.kind == ExprKind::Var ? e.name : indexed_name(e, sc);
      if (const long long* v = sc.find_int(n)) return *v;
      throw InvalidArgument("unbound integer variable '" + n + "'");
    }
    case ExprKind::Add:
      return eval_int(*e.kids[0], sc) + eval_int(*e.kids[1], sc);
    case ExprKind::Sub:
      return eval_int(*e.kids[0], sc) - eval_int(*e.kids[1], sc);
    case ExprKind::Mul:
      return eval_int(*e.kids[0], sc) * eval_int(*e.kids[1], sc);
    case ExprKind::Neg:
      return -eval_int(*e.kids[0], sc);
    case ExprKind::Sum: {
      long long lo = eval_int(*e.kids[0], sc), hi = eval_int(*e.kids[1], sc), acc = 0;
      Scope inner = sc;
      inner.locals.emplace_back(e.name, 0);
      for (long long p = lo; p <= hi; ++p) {
        inner.locals.back().second = p;
        acc += eval_int(*e.kids[2], inner);
      }
      return acc;
    }
  }
  return 0;
}

inline F2Poly anf(const Expr& e, Scope& sc) {
  switch (e.kind) {
    case ExprKind::Int:
      return F2Poly::constant(e.value);
    case ExprKind::Var:
    case ExprKind::Indexed: {
      std::string n = e.kind == ExprKind::Var ? e.name : indexed_name(e, sc);
      if (const long long* v = sc.find_int(n)) return F2Poly::constant(*v);
      if (auto it = sc.b.polys.find(n); it != sc.b.polys.end()) return it->second;
      if (sc.b.free_symbolic) return F2Poly::var(n);
      throw InvalidArgument("unbound variable '" + n + "'");
    }
    case ExprKind::Add:
    case ExprKind::Sub:
      return anf(*e.kids[0], sc) + anf(*e.kids[1], sc);
    case ExprKind::Mul: {
      F2Poly a = anf(*e.kids[0], sc);
      if (a.is_zero()) return a;
      return a * anf(*e.kids[1], sc);
    }
    case ExprKind::Neg:
      return anf(*e.kids[0], sc);
    case ExprKind::Sum: {
      long long lo = eval_int(*e.kids[0], sc), hi = eval_int(*e.kids[1], sc);
      F2Poly acc;
      sc.locals.emplace_back(e.name, 0);
      for (long long p = lo; p <= hi; ++p) {
        sc.locals.back().second = p;
        acc += anf(*e.kids[2], sc);
      }
      sc.locals.pop_back();
      return acc;
    }
  }
  return {};
}

}  // namespace detail

/// Elaborates to canonical ANF: '-' acts as '+', literals reduce mod 2, x*x = x.
/// Throws InvalidArgument for unbound names (when not free_symbolic) and for
/// indices or bounds that are not concrete integers.
inline F2Poly to_anf(const Expr& e, const Bindings& b = {}) {
  detail::Scope sc{b, {}};
  return detail::anf(e, sc);
}
inline F2Poly to_anf(std::string_view text, const Bindings& b = {}) { return to_anf(*parse_sign_expr(text), b); }

/// Exact integer evaluation, used as the reference semantics for to_anf.
inline long long eval_int(const Expr& e, const std::map<std::string, long long>& env) {
  Bindings b;
  b.ints = env;
  b.free_symbolic = false;
  return detail::eval_int(e, detail::Scope{b, {}});
}

}  // namespace bmsign::f2
