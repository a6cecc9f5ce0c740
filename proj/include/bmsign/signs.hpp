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

/// @file signs.hpp
/// Integer/parity evaluation of the sign exponents that govern the
/// Bott–Morse A∞ operations and the boundary of their moduli spaces.
///
/// Every function accepts arbitrary integers and returns a parity (0 or 1).
/// Empty index ranges contribute 0, and dim M_{k+1} := k - 2 is used for all
/// k ≥ 0 since only its parity ever enters.
///
/// Naming: for a boundary stratum an outer polygon with k' = `k_outer` inputs
/// receives, at input slot j, the output of an inner polygon with
/// k'' = `k_inner` inputs ξ_j..ξ_{j+k''-1}; `mu_node` is the Maslov parity of
/// the node component, `mu_out` and `dim_out` describe the output component.
#pragma once

#include <bmsign/core.hpp>

#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace bmsign::signs {

struct SignContext {
  int k = 0;
  int j = 1;
  int k_outer = 1;
  int k_inner = 0;
  std::vector<long long> degs;  // deg ξ_1..ξ_k
  std::vector<long long> mus;   // μ(R_{α_1})..μ(R_{α_k})
  long long mu_node = 0;
  long long mu_out = 0;
  long long dim_out = 0;
  // Dimension of the node component. It cancels from every sign; it is kept
  // so the dimension-based intermediate formulas can be written literally.
  long long dim_node = 0;

  /// Throws InvalidArgument unless k'+k''=k+1, 1≤j≤k', and list lengths equal k.
  void validate() const {
    if (k < 0) throw InvalidArgument("k must be >= 0");
    if (k_outer < 1 || k_inner < 0) throw InvalidArgument("need k' >= 1 and k'' >= 0");
    if (k_outer + k_inner != k + 1) throw InvalidArgument("k' + k'' must equal k + 1");
    if (j < 1 || j > k_outer) throw InvalidArgument("slot j must satisfy 1 <= j <= k'");
    if (static_cast<int>(degs.size()) != k || static_cast<int>(mus.size()) != k)
      throw InvalidArgument("degs and mus must both have length k");
  }

  friend bool operator==(const SignContext&, const SignContext&) = default;
};

namespace detail {

// Sum over the 1-based closed range [first, last] of a k-list; empty ranges give 0.
inline long long range_sum(std::span<const long long> v, int first, int last) {
  long long s = 0;
  for (int p = std::max(first, 1); p <= last && p <= static_cast<int>(v.size()); ++p) s += v[p - 1];
  return s;
}

struct Blocks {
  long long mu_before;  // Σ_{p<j} μ_p
  long long mu_inner;   // Σ_{p=j}^{j+k''-1} μ_p
  long long mu_after;   // Σ_{p≥j+k''} μ_p
  long long deg_inner;
  long long deg_after;
};

inline Blocks blocks(const SignContext& c) {
  const int last_inner = c.j + c.k_inner - 1;
  return {range_sum(c.mus, 1, c.j - 1), range_sum(c.mus, c.j, last_inner), range_sum(c.mus, last_inner + 1, c.k),
          range_sum(c.degs, c.j, last_inner), range_sum(c.degs, last_inner + 1, c.k)};
}

}  // namespace detail

/// |ξ|' = deg ξ + μ - 1 (an integer, not reduced).
constexpr long long shifted_degree(long long deg, long long mu) noexcept { return deg + mu - 1; }

/// ε(ξ_1..ξ_k) = Σ_i (i + Σ_{p<i} μ_p)(deg ξ_i - 1) + 1.
inline Parity epsilon(std::span<const long long> degs, std::span<const long long> mus) {
  if (degs.size() != mus.size()) throw InvalidArgument("epsilon: degs and mus differ in length");
  long long total = 1;
  long long mu_prefix = 0;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    total += parity(static_cast<long long>(i + 1) + mu_prefix) * parity(degs[i] - 1);
    mu_prefix += mus[i];
  }
  return parity(total);
}

/// Parity of dim M_{k+1}(B; L; R) = dim R_{α0} + μ(R_{α0}) - Σ μ(R_{αi}) + k - 2.
inline Parity moduli_dim_parity(long long dim_out, long long mu_out, std::span<const long long> mus, int k) {
  return parity(dim_out + mu_out - std::accumulate(mus.begin(), mus.end(), 0LL) + k - 2);
}

/// ν = dim M + Σ deg ξ_i, the exponent in the Stokes boundary term.
inline Parity nu(long long dim_parity, std::span<const long long> degs) {
  return parity(dim_parity + std::accumulate(degs.begin(), degs.end(), 0LL));
}

/// Σ_{i<j} |ξ_i|', the coderivation sign for inserting at slot j (1 ≤ j ≤ k+1).
inline Parity koszul_prefix(std::span<const long long> degs, std::span<const long long> mus, int j) {
  if (degs.size() != mus.size()) throw InvalidArgument("koszul_prefix: degs and mus differ in length");
  if (j < 1 || j > static_cast<int>(degs.size()) + 1) throw InvalidArgument("koszul_prefix: slot out of range");
  long long s = 0;
  for (int i = 0; i < j - 1; ++i) s += shifted_degree(degs[i], mus[i]);
  return parity(s);
}

/// Parity of |m_k(ξ)|' = Σ|ξ_i|' + 1.
inline Parity out_shifted_degree_parity(std::span<const long long> degs, std::span<const long long> mus) {
  return parity(koszul_prefix(degs, mus, static_cast<int>(degs.size()) + 1) + 1);
}

/// Parity of the unshifted output degree, |out|' + 1 - μ(R_{α0}).
inline Parity out_degree_parity(std::span<const long long> degs, std::span<const long long> mus, long long mu_out) {
  return parity(out_shifted_degree_parity(degs, mus) + 1 - mu_out);
}

/// Closed form of the boundary orientation sign κ.
inline Parity kappa(const SignContext& c) {
  c.validate();
  const auto b = detail::blocks(c);
  const long long a = c.mu_node - b.mu_inner;
  return parity(static_cast<long long>(c.k_inner - 1) * (c.k_outer - c.j) + (c.k_outer - 1) * a + b.mu_before * a +
                c.dim_out + c.mu_out - (b.mu_before + c.mu_node + b.mu_after) + c.k_outer);
}

/// Closed form of the composition sign κ'.
inline Parity kappa_prime(const SignContext& c) {
  c.validate();
  const auto b = detail::blocks(c);
  const long long a = c.mu_node - b.mu_inner;
  const long long deg_sum = std::accumulate(c.degs.begin(), c.degs.end(), 0LL);
  return parity(epsilon(c.degs, c.mus) + deg_sum - c.k - 1 + c.j + static_cast<long long>(c.k_outer) * a +
                b.mu_before * a + static_cast<long long>(c.k_outer - c.j) * c.k_inner);
}

// ---- intermediate quantities of the boundary-orientation computation ----

/// dim M_{k''+1}(B''; L''; R'') for the inner polygon.
inline Parity inner_moduli_dim(const SignContext& c) {
  std::span<const long long> mus(c.mus);
  return moduli_dim_parity(c.dim_node, c.mu_node, mus.subspan(c.j - 1, c.k_inner), c.k_inner);
}

/// μ-list of the outer polygon: (μ_1..μ_{j-1}, μ_node, μ_{j+k''}..μ_k).
inline std::vector<long long> outer_mus(const SignContext& c) {
  std::vector<long long> out(c.mus.begin(), c.mus.begin() + (c.j - 1));
  out.push_back(c.mu_node);
  out.insert(out.end(), c.mus.begin() + (c.j - 1 + c.k_inner), c.mus.end());
  return out;
}

/// dim M_{k'+1}(B'; L'; R') for the outer polygon.
inline Parity outer_moduli_dim(const SignContext& c) {
  return moduli_dim_parity(c.dim_out, c.mu_out, outer_mus(c), c.k_outer);
}

/// δ₁: weighted sign of moving the inner orientation factors past Θ_{α_1..α_{j-1}}.
inline Parity delta1(const SignContext& c) {
  c.validate();
  const auto b = detail::blocks(c);
  return parity(b.mu_before * (inner_moduli_dim(c) - c.dim_node - (c.k_inner - 2)));
}

/// γ₁ = (k''-1)(k'-j): reordering the boundary marked points.
inline Parity gamma1(const SignContext& c) {
  c.validate();
  return parity(static_cast<long long>(c.k_inner - 1) * (c.k_outer - c.j));
}

/// γ₂ = dim(°M''°)·(dim M_{k'+1} + 1).
inline Parity gamma2(const SignContext& c) {
  c.validate();
  const long long fiber_dim = inner_moduli_dim(c) - (c.k_inner - 2) - c.dim_node;
  return parity(fiber_dim * ((c.k_outer - 2) + 1));
}

inline Parity delta2(const SignContext& c) { return parity(gamma1(c) + gamma2(c)); }

/// δ₃ = dim M_{k'+1}(B'; L'; R').
inline Parity delta3(const SignContext& c) {
  c.validate();
  return outer_moduli_dim(c);
}

/// δ₄ = Σ_{i<j}|ξ_i|' + ε(outer inputs with the inner output at slot j) + ε(inner inputs).
/// The inner output carries Maslov parity μ_node and degree from out_degree_parity.
inline Parity delta4(const SignContext& c) {
  c.validate();
  std::span<const long long> degs(c.degs), mus(c.mus);
  const auto inner_degs = degs.subspan(c.j - 1, c.k_inner);
  const auto inner_mus = mus.subspan(c.j - 1, c.k_inner);
  std::vector<long long> od(c.degs.begin(), c.degs.begin() + (c.j - 1));
  od.push_back(out_degree_parity(inner_degs, inner_mus, c.mu_node));
  od.insert(od.end(), c.degs.begin() + (c.j - 1 + c.k_inner), c.degs.end());
  return parity(koszul_prefix(degs, mus, c.j) + epsilon(od, outer_mus(c)) + epsilon(inner_degs, inner_mus));
}

/// η₁: moving the pushed-forward inner output past the trailing inputs.
inline Parity eta1(const SignContext& c) {
  c.validate();
  const auto b = detail::blocks(c);
  return parity((b.deg_inner + (c.mu_node - b.mu_inner + c.k_inner - 2)) * b.deg_after);
}

/// η₂: moving the inner inputs back past the trailing inputs.
inline Parity eta2(const SignContext& c) {
  c.validate();
  const auto b = detail::blocks(c);
  return parity(b.deg_inner * b.deg_after);
}

/// δ₅ = η₁ + η₂ in collapsed form (μ_node - Σ_inner μ + k'' - 2)(Σ_{i≥j+k''} deg ξ_i).
inline Parity delta5(const SignContext& c) {
  c.validate();
  const auto b = detail::blocks(c);
  return parity((c.mu_node - b.mu_inner + c.k_inner - 2) * b.deg_after);
}

/// Parity of the master congruence κ + κ' + ε + 1 + ν (zero when the sign convention is consistent).
inline Parity master_defect(const SignContext& c) {
  const Parity dim = moduli_dim_parity(c.dim_out, c.mu_out, c.mus, c.k);
  return parity(kappa(c) + kappa_prime(c) + epsilon(c.degs, c.mus) + 1 + nu(dim, c.degs));
}

}  // namespace bmsign::signs
