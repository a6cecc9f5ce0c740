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

#include <bmsign/signs.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace bmsign::signs;
using bmsign::InvalidArgument;
using bmsign::parity;

namespace {

SignContext ctx(int k, int j, int k1, int k2, std::vector<long long> degs, std::vector<long long> mus,
                long long mu_node = 0, long long mu_out = 0, long long dim_out = 0) {
  SignContext c;
  c.k = k;
  c.j = j;
  c.k_outer = k1;
  c.k_inner = k2;
  c.degs = std::move(degs);
  c.mus = std::move(mus);
  c.mu_node = mu_node;
  c.mu_out = mu_out;
  c.dim_out = dim_out;
  return c;
}

// Integer transcriptions with 1-based loops and a single final reduction.
namespace oracle {

long long mod2(long long x) { return ((x % 2) + 2) % 2; }

long long eps(const std::vector<long long>& d, const std::vector<long long>& mu) {
  long long s = 1;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    long long pre = 0;
    for (std::size_t p = 1; p < i; ++p) pre += mu[p - 1];
    s += (static_cast<long long>(i) + pre) * (d[i - 1] - 1);
  }
  return mod2(s);
}

long long sum(const std::vector<long long>& v, int lo, int hi) {
  long long s = 0;
  for (int p = lo; p <= hi; ++p) s += v[p - 1];
  return s;
}

long long kappa(const SignContext& c) {
  const int k = c.k, j = c.j, k1 = c.k_outer, k2 = c.k_inner;
  long long A = c.mu_node - sum(c.mus, j, j + k2 - 1);
  long long S = sum(c.mus, 1, j - 1);
  return mod2((k2 - 1) * (k1 - j) + (k1 - 1) * A + S * A + c.dim_out + c.mu_out -
              (S + c.mu_node + sum(c.mus, j + k2, k)) + k1);
}

long long kappa_prime(const SignContext& c) {
  const int k = c.k, j = c.j, k1 = c.k_outer, k2 = c.k_inner;
  long long A = c.mu_node - sum(c.mus, j, j + k2 - 1);
  return mod2(eps(c.degs, c.mus) + sum(c.degs, 1, k) - k - 1 + j + k1 * A + sum(c.mus, 1, j - 1) * A + (k1 - j) * k2);
}

long long dim_moduli(long long dim_out, long long mu_out, const std::vector<long long>& mus, int k) {
  return mod2(dim_out + mu_out - sum(mus, 1, static_cast<int>(mus.size())) + k - 2);
}

}  // namespace oracle

SignContext random_ctx(bmsign::testing::Gen& g, int max_k) {
  SignContext c;
  c.k = static_cast<int>(g.integer(0, max_k));
  c.k_inner = static_cast<int>(g.integer(0, c.k + 1));
  c.k_outer = c.k + 1 - c.k_inner;
  if (c.k_outer < 1) c.k_outer = 1, c.k_inner = c.k;
  c.j = static_cast<int>(g.integer(1, c.k_outer));
  for (int i = 0; i < c.k; ++i) {
    c.degs.push_back(g.integer(-3, 6));
    c.mus.push_back(g.integer(0, 1));
  }
  c.mu_node = g.integer(0, 1);
  c.mu_out = g.integer(0, 1);
  c.dim_out = g.integer(0, 5);
  c.dim_node = g.integer(0, 5);
  return c;
}

}  // namespace

TEST(Signs, ShiftedDegree) {
  EXPECT_EQ(shifted_degree(1, 0), 0);
  EXPECT_EQ(shifted_degree(0, 1), 0);
  EXPECT_EQ(shifted_degree(2, 1), 2);
}

TEST(Signs, EpsilonExamples) {
  EXPECT_EQ(epsilon(std::vector<long long>{2}, std::vector<long long>{1}), 0);
  EXPECT_EQ(epsilon(std::vector<long long>{2}, std::vector<long long>{0}), 0);
  EXPECT_EQ(epsilon(std::vector<long long>{1, 1}, std::vector<long long>{0, 0}), 1);
  EXPECT_EQ(epsilon(std::vector<long long>{1, 1}, std::vector<long long>{0, 1}), 1);
  EXPECT_EQ(epsilon(std::vector<long long>{1, 1}, std::vector<long long>{1, 0}), 1);
  EXPECT_EQ(epsilon(std::vector<long long>{}, std::vector<long long>{}), 1);
  EXPECT_THROW(epsilon(std::vector<long long>{1}, std::vector<long long>{}), InvalidArgument);
}

TEST(Signs, KappaExamples) {
  EXPECT_EQ(kappa(ctx(2, 1, 1, 2, {0, 0}, {0, 0})), 1);
  EXPECT_EQ(kappa(ctx(2, 1, 2, 1, {0, 0}, {0, 0})), 0);
}

TEST(Signs, KappaPrimeExamples) {
  EXPECT_EQ(kappa_prime(ctx(2, 1, 1, 2, {0, 0}, {0, 0})), 0);
  EXPECT_EQ(kappa_prime(ctx(2, 1, 2, 1, {0, 0}, {0, 0})), 1);
}

TEST(Signs, DeltaExamples) {
  auto c = ctx(2, 1, 1, 2, {0, 0}, {0, 0});
  EXPECT_EQ(delta1(c), 0);
  EXPECT_EQ(delta2(c), 0);
  EXPECT_EQ(delta3(c), 1);
  EXPECT_EQ(delta5(c), 0);
  EXPECT_EQ(delta5(ctx(2, 1, 2, 1, {0, 0}, {0, 0})), 0);
  EXPECT_EQ(delta5(ctx(2, 1, 2, 1, {0, 1}, {0, 0})), 1);  // = d2
}

TEST(Signs, OutDegree) {
  std::vector<long long> d1{1}, m1{0};
  EXPECT_EQ(out_shifted_degree_parity(d1, m1), 1);
  EXPECT_EQ(out_degree_parity(d1, m1, 0), 0);
  std::vector<long long> d2{1, 1}, m2{0, 0};
  EXPECT_EQ(out_shifted_degree_parity(d2, m2), 1);
  EXPECT_EQ(out_degree_parity(d2, m2, 0), 0);
  std::vector<long long> none;
  EXPECT_EQ(out_shifted_degree_parity(none, none), 1);
}

TEST(Signs, ModuliDimAndNu) {
  EXPECT_EQ(moduli_dim_parity(0, 0, std::vector<long long>{0, 0}, 2), 0);
  EXPECT_EQ(moduli_dim_parity(1, 1, std::vector<long long>{}, 0), 0);
  EXPECT_EQ(moduli_dim_parity(0, 1, std::vector<long long>{1}, 1), 1);
  EXPECT_EQ(nu(0, std::vector<long long>{0, 0}), 0);
  EXPECT_EQ(nu(1, std::vector<long long>{1}), 0);
  EXPECT_EQ(nu(1, std::vector<long long>{1, 2, 3}), 1);
}

TEST(Signs, KoszulPrefix) {
  std::vector<long long> d{1}, m{0};
  EXPECT_EQ(koszul_prefix(d, m, 1), 0);
  EXPECT_EQ(koszul_prefix(d, m, 2), 0);
  std::vector<long long> d2{2, 1}, m2{1, 0};
  EXPECT_EQ(koszul_prefix(d2, m2, 3), 0);
  EXPECT_THROW(koszul_prefix(d2, m2, 0), InvalidArgument);
  EXPECT_THROW(koszul_prefix(d2, m2, 4), InvalidArgument);
}

TEST(Signs, ValidationRejectsBadContexts) {
  EXPECT_THROW(kappa(ctx(2, 1, 2, 2, {0, 0}, {0, 0})), InvalidArgument);
  EXPECT_THROW(kappa(ctx(2, 3, 2, 1, {0, 0}, {0, 0})), InvalidArgument);
  EXPECT_THROW(kappa(ctx(2, 1, 2, 1, {0}, {0, 0})), InvalidArgument);
  EXPECT_THROW(kappa(ctx(2, 0, 2, 1, {0, 0}, {0, 0})), InvalidArgument);
}

TEST(SignsProperty, AgreesWithIntegerTranscription) {
  bmsign::testing::Gen g(31);
  for (int t = 0; t < 3000; ++t) {
    auto c = random_ctx(g, 7);
    ASSERT_EQ(kappa(c), oracle::kappa(c));
    ASSERT_EQ(kappa_prime(c), oracle::kappa_prime(c));
    ASSERT_EQ(epsilon(c.degs, c.mus), oracle::eps(c.degs, c.mus));
    ASSERT_EQ(moduli_dim_parity(c.dim_out, c.mu_out, c.mus, c.k),
              oracle::dim_moduli(c.dim_out, c.mu_out, c.mus, c.k));
  }
}

TEST(SignsProperty, IdentitiesOnRandomContexts) {
  bmsign::testing::Gen g(32);
  for (int t = 0; t < 5000; ++t) {
    auto c = random_ctx(g, 7);
    ASSERT_EQ(master_defect(c), 0);
    ASSERT_EQ(kappa(c), parity(delta1(c) + delta2(c) + delta3(c)));
    ASSERT_EQ(kappa_prime(c), parity(delta4(c) + delta5(c)));
    ASSERT_EQ(delta5(c), parity(eta1(c) + eta2(c)));
  }
}

TEST(SignsProperty, DependsOnDegreesOnlyThroughParity) {
  bmsign::testing::Gen g(33);
  for (int t = 0; t < 1000; ++t) {
    auto c = random_ctx(g, 6);
    if (c.k == 0) continue;
    auto c2 = c;
    c2.degs[g.integer(0, c.k - 1)] += 2;
    c2.dim_node += 7;  // node dimension never matters
    ASSERT_EQ(epsilon(c.degs, c.mus), epsilon(c2.degs, c2.mus));
    ASSERT_EQ(kappa_prime(c), kappa_prime(c2));
    ASSERT_EQ(kappa(c), kappa(c2));
    ASSERT_EQ(delta4(c), delta4(c2));
    ASSERT_EQ(delta1(c) + delta2(c), delta1(c2) + delta2(c2));
  }
}

TEST(SignsProperty, Rel2Congruence) {
  bmsign::testing::Gen g(34);
  for (int t = 0; t < 2000; ++t) {
    auto c = random_ctx(g, 7);
    if (c.k == 0) continue;
    int j = static_cast<int>(g.integer(1, c.k));
    auto bumped = c.degs;
    bumped[j - 1] += 1;
    long long prefix = 0;
    for (int p = 0; p < j - 1; ++p) prefix += c.degs[p];
    ASSERT_EQ(parity(koszul_prefix(c.degs, c.mus, j) + epsilon(bumped, c.mus)),
              parity(prefix + epsilon(c.degs, c.mus) + 1));
  }
}
