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

#include <bmsign/f2poly.hpp>
#include <bmsign/sign_expr.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace bmsign::f2;
using bmsign::InvalidArgument;
using bmsign::ParseError;

namespace {

F2Poly V(const char* n) { return F2Poly::var(n); }

// Möbius transform of a truth table back to ANF coefficients.
F2Poly anf_from_truth_table(const std::vector<std::string>& vars, const std::vector<int>& table) {
  std::vector<int> a = table;
  const std::size_t n = vars.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < a.size(); ++w)
      if (w & (std::size_t{1} << i)) a[w] ^= a[w ^ (std::size_t{1} << i)];
  std::vector<F2Poly::Monomial> monos;
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w]) {
      F2Poly::Monomial m;
      for (std::size_t i = 0; i < n; ++i)
        if (w & (std::size_t{1} << i)) m.push_back(vars[i]);
      monos.push_back(m);
    }
  return F2Poly::from_monomials(monos);
}

const char* kVars[] = {"a", "b", "c", "x", "y"};

std::string random_expr(bmsign::testing::Gen& g, int depth) {
  if (depth == 0 || g.integer(0, 4) == 0) {
    switch (g.integer(0, 3)) {
      case 0:
        return std::to_string(g.integer(0, 9));
      case 1:
        return "m_" + std::to_string(g.integer(1, 3));
      default:
        return kVars[g.integer(0, 4)];
    }
  }
  switch (g.integer(0, 5)) {
    case 0:
      return random_expr(g, depth - 1) + " + " + random_expr(g, depth - 1);
    case 1:
      return random_expr(g, depth - 1) + " - " + random_expr(g, depth - 1);
    case 2:
      return "(" + random_expr(g, depth - 1) + ")*(" + random_expr(g, depth - 1) + ")";
    case 3:
      return "-" + random_expr(g, depth - 1);
    case 4:
      return "Sum(p=1..3, " + random_expr(g, depth - 1) + "*m_p)";
    default:
      return "(" + random_expr(g, depth - 1) + ")";
  }
}

}  // namespace

TEST(F2Poly, Basics) {
  EXPECT_TRUE(F2Poly::zero().is_zero());
  EXPECT_EQ(F2Poly::constant(3), F2Poly::one());
  EXPECT_EQ(F2Poly::constant(-2), F2Poly::zero());
  EXPECT_EQ(V("x") * V("x"), V("x"));
  EXPECT_TRUE((V("x") + V("x")).is_zero());
  EXPECT_EQ((V("d1") * V("d2") + V("m1") + F2Poly::one()).to_string(), "1 + m1 + d1*d2");
  EXPECT_EQ(F2Poly::zero().to_string(), "0");
  EXPECT_THROW(F2Poly::var(""), InvalidArgument);
}

TEST(F2Poly, Evaluate) {
  EXPECT_EQ((V("d1") * V("d2")).evaluate({{"d1", 1}, {"d2", 1}}), 1);
  EXPECT_EQ(F2Poly::zero().evaluate({{"q", 1}}), 0);
  EXPECT_EQ(F2Poly::zero().evaluate({}), 0);
  EXPECT_EQ(F2Poly::one().evaluate({}), 1);
  EXPECT_THROW((V("d1") * V("d2")).evaluate({{"d1", 1}}), InvalidArgument);
}

TEST(F2Poly, Equivalence) {
  auto r = anf_equivalent(V("d1") * V("d2"), to_anf("d1*d2 + 0"));
  EXPECT_TRUE(r.equivalent);
  EXPECT_FALSE(r.witness);
  auto s = anf_equivalent(V("d1"), V("d2"));
  EXPECT_FALSE(s.equivalent);
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(*s.witness, (Assignment{{"d1", 1}, {"d2", 0}}));
}

TEST(F2Poly, WitnessAboveExhaustiveLimit) {
  F2Poly p = F2Poly::one();
  for (int i = 0; i < 24; ++i) p *= V(("v" + std::to_string(i)).c_str());
  p += V("v3") * V("v17") + V("v5");
  auto w = find_witness(p);
  ASSERT_TRUE(w);
  EXPECT_EQ(p.evaluate(*w), 1);
}

TEST(SignExpr, ParseExamples) {
  EXPECT_EQ(structure(*parse_sign_expr("(k2-1)*(k1-j)")), "Mul(Sub(Var k2, 1), Sub(Var k1, Var j))");
  auto s = parse_sign_expr("Sum(p=1..3, mu_p)");
  ASSERT_EQ(s->kind, ExprKind::Sum);
  EXPECT_EQ(s->kids[0]->value, 1);
  EXPECT_EQ(s->kids[1]->value, 3);
  EXPECT_EQ(structure(*s), "Sum(p, 1, 3, Indexed(mu, Var p))");
  try {
    parse_sign_expr("x*(y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4U);
    EXPECT_EQ(e.expected(), "')'");
  }
  EXPECT_THROW(parse_sign_expr(""), ParseError);
  EXPECT_THROW(parse_sign_expr("a +"), ParseError);
  EXPECT_THROW(parse_sign_expr("Sum(p=1..2 x)"), ParseError);
  EXPECT_THROW(parse_sign_expr("a b"), ParseError);
}

TEST(SignExpr, AnfExamples) {
  EXPECT_EQ(to_anf("d1*(d2+1) + d1"), V("d1") * V("d2"));
  EXPECT_TRUE(to_anf("x*x + x").is_zero());
  EXPECT_EQ(to_anf("3"), F2Poly::one());
  EXPECT_EQ(to_anf("Sum(p=1..3, m_p)"), V("m1") + V("m2") + V("m3"));
  EXPECT_TRUE(to_anf("Sum(p=3..2, m_p)").is_zero());
  Bindings b;
  b.ints["j"] = 2;
  EXPECT_EQ(to_anf("d[j+1] + d_j", b), V("d3") + V("d2"));
  b.polys["eps"] = V("q");
  EXPECT_EQ(to_anf("eps + 1", b), V("q") + F2Poly::one());
  b.free_symbolic = false;
  EXPECT_THROW(to_anf("zz", b), InvalidArgument);
  EXPECT_THROW(to_anf("Sum(p=1..n, p)"), InvalidArgument);
}

TEST(SignExpr, PrinterRoundTrip) {
  for (const char* s : {"a - (b - c)", "a - b - c", "-(a + b)*c", "Sum(p=1..k - 1, m_p*(d[p+1] - 1)) + 1",
                        "(a*b)*c", "a*(b*c)", "--a", "m_3 + x"}) {
    std::string once = print(*parse_sign_expr(s));
    EXPECT_EQ(print(*parse_sign_expr(once)), once) << s;
  }
  EXPECT_EQ(print(*parse_sign_expr("a - (b - c)")), "a - (b - c)");
  EXPECT_EQ(print(*parse_sign_expr("((a))*(b + c)")), "a*(b + c)");
}

TEST(SignExprProperty, RoundTripAndSoundness) {
  bmsign::testing::Gen g(41);
  for (int t = 0; t < 1500; ++t) {
    std::string text = random_expr(g, 4);
    ExprPtr e = parse_sign_expr(text);
    std::string p1 = print(*e);
    ExprPtr e2 = parse_sign_expr(p1);
    ASSERT_EQ(print(*e2), p1) << text;

    F2Poly anf = to_anf(*e);
    ASSERT_EQ(to_anf(*e2), anf);
    for (int s = 0; s < 4; ++s) {
      std::map<std::string, long long> env;
      Assignment asg;
      for (const char* v : kVars) {
        env[v] = g.integer(-3, 3);
        asg[v] = bmsign::parity(env[v]);
      }
      for (int i = 1; i <= 3; ++i) {
        std::string n = "m" + std::to_string(i);
        env[n] = g.integer(-3, 3);
        asg[n] = bmsign::parity(env[n]);
      }
      ASSERT_EQ(anf.evaluate(asg), bmsign::parity(eval_int(*e, env))) << text;
    }
  }
}

TEST(F2PolyProperty, AnfIsCanonical) {
  bmsign::testing::Gen g(42);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::string> vars;
    int n = static_cast<int>(g.integer(1, 12));
    for (int i = 0; i < n; ++i) vars.push_back("v" + std::to_string(i));
    F2Poly p;
    for (int m = 0; m < 6; ++m) {
      F2Poly mono = F2Poly::one();
      for (int i = 0; i < n; ++i)
        if (g.integer(0, 3) == 0) mono *= F2Poly::var(vars[i]);
      // Multiply out a random binomial so the input is not already a monomial list.
      p += mono * (F2Poly::var(vars[g.integer(0, n - 1)]) + F2Poly::constant(g.integer(0, 1)));
    }
    CompiledPoly c(p, vars);
    std::vector<int> table(std::size_t{1} << n);
    for (std::size_t w = 0; w < table.size(); ++w) table[w] = c(w);
    ASSERT_EQ(anf_from_truth_table(vars, table), p);
    ASSERT_TRUE(truth_table_equal(p, anf_from_truth_table(vars, table)));
  }
}
