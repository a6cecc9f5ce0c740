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

#include <bmsign/prover.hpp>

#include <gtest/gtest.h>

using namespace bmsign::prover;
using bmsign::Rational;
using bmsign::novikov::GappedSpectrum;

namespace {

// Zero-parity instance of a formula, evaluated through the DSL.
int at_zero(const F2Poly& p) {
  Assignment a;
  for (const auto& v : p.variables()) a[v] = 0;
  return p.evaluate(a);
}

}  // namespace

TEST(Prover, MasterIdentityExample) {
  auto r = prove_master_identity(2, 1, 2, {}, {.truth_table = true});
  EXPECT_TRUE(r.proven);
  EXPECT_TRUE(r.residual.is_zero());
  EXPECT_FALSE(r.witness);
  EXPECT_TRUE(r.truth_table_checked);
  EXPECT_TRUE(r.truth_table_agrees);

  SignFormulas f;
  Instance in(f, 2, 1, 2);
  EXPECT_EQ(at_zero(in.kappa()), 1);
  EXPECT_EQ(at_zero(in.kappa_prime()), 0);
  EXPECT_EQ(at_zero(in.eps()), 0);
  EXPECT_EQ(at_zero(in.nu()), 0);
}

TEST(Prover, MutatedKappaIsCaught) {
  SignFormulas f;
  f.kappa = "(k2-1)*(k1-j) + (k1-1)*(ma - Sum(p=j..j+k2-1, m_p)) + Sum(p=1..j-1, m_p)*(ma - Sum(p=j..j+k2-1, m_p))"
            " + r0 + m0 - (Sum(p=1..j-1, m_p) + ma + Sum(p=j+k2..k, m_p))";
  auto r = prove_master_identity(2, 1, 2, f, {.truth_table = true});
  EXPECT_FALSE(r.proven);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.residual.evaluate(*r.witness), 1);
  // The numeric module carries the unmutated κ, so the tables disagree.
  EXPECT_FALSE(r.truth_table_agrees);
}

TEST(Prover, DecompositionExamples) {
  EXPECT_TRUE(prove_kappa_decomposition(3, 2, 2, {}, {.truth_table = true}).proven);
  EXPECT_TRUE(prove_kappa_prime_decomposition(3, 2, 2, {}, {.truth_table = true}).proven);
  EXPECT_TRUE(prove_eta_collapse(3, 2, 2).proven);

  SignFormulas f;
  Instance in(f, 3, 2, 2);
  EXPECT_EQ(at_zero(in.kappa() + in(f.delta1) + in(f.gamma1) + in(f.gamma2) + in(f.delta3)), 0);

  SignFormulas g;
  g.gamma1 = "0";
  auto r = prove_kappa_decomposition(3, 1, 2, g);
  EXPECT_FALSE(r.proven);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.residual.evaluate(*r.witness), 1);
}

TEST(Prover, Rel2Examples) {
  EXPECT_TRUE(prove_rel2_congruence(1, 1, {}, {.truth_table = true}).proven);
  EXPECT_TRUE(prove_rel2_congruence(3, 2, {}, {.truth_table = true}).proven);
  EXPECT_THROW(prove_rel2_congruence(3, 4), bmsign::InvalidArgument);
}

TEST(Prover, AllInstancesUpToFour) {
  for (int k = 0; k <= 4; ++k)
    for (int k2 = 0; k2 <= k + 1; ++k2)
      for (int j = 1; j <= k + 1 - k2; ++j) {
        ProofOptions tt{.truth_table = true};
        auto a = prove_master_identity(k, j, k2, {}, tt);
        auto b = prove_kappa_decomposition(k, j, k2, {}, tt);
        auto c = prove_kappa_prime_decomposition(k, j, k2, {}, tt);
        ASSERT_TRUE(a.proven && a.truth_table_agrees) << a.id << " " << a.residual;
        ASSERT_TRUE(b.proven && b.truth_table_agrees) << b.id << " " << b.residual;
        ASSERT_TRUE(c.proven && c.truth_table_agrees) << c.id << " " << c.residual;
      }
}

TEST(Prover, TheoremSmall) {
  auto r = prove_theorem(2, GappedSpectrum::from_levels({0}));
  EXPECT_TRUE(r.ok()) << r.diagnostic;
  EXPECT_TRUE(r.residual.empty());
  // Only the PUSH_D pairs exist at k = 2, B = 0.
  EXPECT_EQ(r.cancelled.size(), 2U);

  auto r4 = prove_theorem(4, GappedSpectrum::from_levels({0, 1, 2}));
  EXPECT_TRUE(r4.ok());
  EXPECT_GT(r4.cancelled.size(), 20U);
}

TEST(Prover, TheoremCurvatureArity) {
  auto r = prove_theorem(0, GappedSpectrum::from_levels({0, 1, 2}));
  EXPECT_TRUE(r.ok());
  // B = 2 splits as m_{1,1}(m_{0,1}).
  EXPECT_EQ(r.cancelled.size(), 1U);
}

TEST(Prover, TheoremFlipIsNamed) {
  auto clean = prove_theorem(3, GappedSpectrum::from_levels({0, 1}));
  ASSERT_TRUE(clean.ok());
  std::string target;
  for (const auto& c : clean.cancelled)
    if (c.a.kind == TermKind::BDRY) target = c.key;
  ASSERT_FALSE(target.empty());
  TheoremOptions opt;
  opt.flip_term = target;
  auto bad = prove_theorem(3, GappedSpectrum::from_levels({0, 1}), opt);
  EXPECT_FALSE(bad.ok());
  ASSERT_EQ(bad.residual.size(), 1U);
  EXPECT_EQ(bad.residual[0].key, target);
  EXPECT_TRUE(bad.residual[0].witness);
}

TEST(Prover, TheoremAbortsOnUnprovenPrerequisite) {
  TheoremOptions opt;
  opt.formulas.eps = "Sum(i=1..k, i*(d_i - 1)) + 1";  // drops the Maslov prefix
  auto r = prove_theorem(2, GappedSpectrum::from_levels({0, 1}), opt);
  EXPECT_TRUE(r.aborted);
  EXPECT_NE(r.diagnostic.find("prerequisite"), std::string::npos);
}
