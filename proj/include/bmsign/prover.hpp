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

/// @file prover.hpp
/// Per-arity symbolic proofs of the sign identities and a formal replay of
/// the cancellation in the A∞ relations.
///
/// Symbolic variables: d1..dk (input degrees), m1..mk (input Maslov parities),
/// ma (node), m0 and r0 (output parity and dimension), ra (node dimension).
/// Integer parameters: k, j, k1 = k', k2 = k''. Formulas are sign-DSL text
/// (see sign_expr.hpp) and may be overridden to test that a wrong formula is
/// caught.
#pragma once

#include <bmsign/core.hpp>
#include <bmsign/f2poly.hpp>
#include <bmsign/novikov.hpp>
#include <bmsign/sign_expr.hpp>
#include <bmsign/signs.hpp>
#include <bmsign/strata.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bmsign::prover {

using f2::Assignment;
using f2::F2Poly;

struct SignFormulas {
  std::string eps = "Sum(i=1..k, (i + Sum(p=1..i-1, m_p))*(d_i - 1)) + 1";
  std::string dim_moduli = "r0 + m0 - Sum(p=1..k, m_p) + k - 2";
  std::string nu = "dimM + Sum(p=1..k, d_p)";
  std::string kappa =
      "(k2-1)*(k1-j) + (k1-1)*(ma - Sum(p=j..j+k2-1, m_p)) + Sum(p=1..j-1, m_p)*(ma - Sum(p=j..j+k2-1, m_p))"
      " + r0 + m0 - (Sum(p=1..j-1, m_p) + ma + Sum(p=j+k2..k, m_p)) + k1";
  std::string kappa_prime =
      "eps + Sum(i=1..k, d_i) - k - 1 + j + k1*(ma - Sum(i=j..j+k2-1, m_i))"
      " + Sum(p=1..j-1, m_p)*(ma - Sum(p=j..j+k2-1, m_p)) + (k1-j)*k2";
  std::string dim_inner = "ra + ma - Sum(p=j..j+k2-1, m_p) + k2 - 2";
  std::string dim_outer = "r0 + m0 - (Sum(p=1..j-1, m_p) + ma + Sum(p=j+k2..k, m_p)) + k1 - 2";
  std::string delta1 = "Sum(p=1..j-1, m_p)*(dimInner - ra - (k2 - 2))";
  std::string gamma1 = "(k2-1)*(k1-j)";
  std::string gamma2 = "(dimInner - ra - (k2 - 2))*((k1 - 2) + 1)";
  std::string delta3 = "dimOuter";
  std::string inner_out_degree = "Sum(p=j..j+k2-1, d_p + m_p - 1) + 1 + 1 - ma";
  std::string eps_inner = "Sum(i=1..k2, (i + Sum(p=1..i-1, m[j+p-1]))*(d[j+i-1] - 1)) + 1";
  std::string eps_outer =
      "Sum(i=1..j-1, (i + Sum(p=1..i-1, m_p))*(d_i - 1)) + (j + Sum(p=1..j-1, m_p))*(dout - 1)"
      " + Sum(i=j+1..k1, (i + Sum(p=1..j-1, m_p) + ma + Sum(p=j+k2..i+k2-2, m_p))*(d[i+k2-1] - 1)) + 1";
  std::string koszul = "Sum(p=1..j-1, d_p + m_p - 1)";
  std::string delta4 = "koszul + epsOuter + epsInner";
  std::string delta5 = "(ma - Sum(p=j..j+k2-1, m_p) + k2 - 2)*Sum(p=j+k2..k, d_p)";
  std::string eta1 = "(Sum(p=j..j+k2-1, d_p) + ma - Sum(p=j..j+k2-1, m_p) + k2 - 2)*Sum(p=j+k2..k, d_p)";
  std::string eta2 = "Sum(p=j..j+k2-1, d_p)*Sum(p=j+k2..k, d_p)";
  std::string deg_prefix = "Sum(p=1..j-1, d_p)";
};

/// Every symbolic variable at arity k, in a fixed order.
inline std::vector<std::string> variables(int k) {
  std::vector<std::string> v;
  for (int i = 1; i <= k; ++i) v.push_back("d" + std::to_string(i));
  for (int i = 1; i <= k; ++i) v.push_back("m" + std::to_string(i));
  for (const char* x : {"ma", "m0", "r0", "ra"}) v.emplace_back(x);
  return v;
}

/// Elaborates the formula set at one (k, j, k'') instance.
class Instance {
 public:
  Instance(const SignFormulas& f, int k, int j, int k_inner) : f_(f) {
    b_.ints = {{"k", k}, {"j", j}, {"k1", k + 1 - k_inner}, {"k2", k_inner}};
    bind("eps", f_.eps);
    bind("dimM", f_.dim_moduli);
    bind("dimInner", f_.dim_inner);
    bind("dimOuter", f_.dim_outer);
    bind("dout", f_.inner_out_degree);
    bind("koszul", f_.koszul);
  }

  F2Poly operator()(const std::string& formula) const { return f2::to_anf(formula, b_); }

  /// Elaboration with extra polynomial substitutions (e.g. d2 -> d2 + 1).
  F2Poly with(const std::string& formula, const std::map<std::string, F2Poly>& subst) const {
    f2::Bindings b = b_;
    for (const auto& [n, p] : subst) b.polys[n] = p;
    // Bound sub-formulas must see the substitution too.
    for (const auto& [n, text] : bound_)
      if (!subst.count(n)) b.polys[n] = f2::to_anf(text, b);
    return f2::to_anf(formula, b);
  }

  F2Poly kappa() const { return (*this)(f_.kappa); }
  F2Poly kappa_prime() const { return (*this)(f_.kappa_prime); }
  F2Poly eps() const { return b_.polys.at("eps"); }
  F2Poly nu() const { return (*this)(f_.nu); }
  F2Poly delta4() const {
    f2::Bindings b = b_;
    b.polys["epsOuter"] = f2::to_anf(f_.eps_outer, b);
    b.polys["epsInner"] = f2::to_anf(f_.eps_inner, b);
    return f2::to_anf(f_.delta4, b);
  }
  const SignFormulas& formulas() const { return f_; }

 private:
  void bind(const std::string& name, const std::string& text) {
    b_.polys[name] = f2::to_anf(text, b_);
    bound_.emplace_back(name, text);
  }

  const SignFormulas& f_;
  f2::Bindings b_;
  std::vector<std::pair<std::string, std::string>> bound_;
};

struct ProofReport {
  std::string id;
  bool proven = false;
  F2Poly residual;                     // zero iff the identity holds
  std::optional<Assignment> witness;  // when not proven
  bool truth_table_checked = false;
  bool truth_table_agrees = true;  // numeric signs module agrees with the ANF on every assignment
};

struct ProofOptions {
  bool truth_table = false;
};

namespace detail {

inline std::string instance_id(const char* what, int k, int j, int k_inner) {
  std::string s = std::string(what) + "[k=" + std::to_string(k) + ",j=" + std::to_string(j);
  if (k_inner >= 0) s += ",k''=" + std::to_string(k_inner);
  return s + "]";
}

inline void check_instance(int k, int j, int k_inner) {
  if (k < 0 || k_inner < 0 || k_inner > k + 1) throw InvalidArgument("instance needs 0 <= k'' <= k + 1");
  if (j < 1 || j > k + 1 - k_inner) throw InvalidArgument("instance needs 1 <= j <= k'");
}

inline signs::SignContext decode_context(int k, int j, int k_inner, std::uint64_t w) {
  signs::SignContext ctx;
  ctx.k = k;
  ctx.j = j;
  ctx.k_outer = k + 1 - k_inner;
  ctx.k_inner = k_inner;
  auto bit = [&](int i) { return static_cast<long long>((w >> i) & 1U); };
  for (int i = 0; i < k; ++i) ctx.degs.push_back(bit(i));
  for (int i = 0; i < k; ++i) ctx.mus.push_back(bit(k + i));
  ctx.mu_node = bit(2 * k);
  ctx.mu_out = bit(2 * k + 1);
  ctx.dim_out = bit(2 * k + 2);
  ctx.dim_node = bit(2 * k + 3);
  return ctx;
}

template <class Numeric>
bool truth_table(const F2Poly& residual, int k, int j, int k_inner, Numeric numeric) {
  f2::CompiledPoly c(residual, variables(k));
  const std::uint64_t n = std::uint64_t{1} << (2 * k + 4);
  for (std::uint64_t w = 0; w < n; ++w)
    if (c(w) != numeric(decode_context(k, j, k_inner, w))) return false;
  return true;
}

inline ProofReport finish(std::string id, F2Poly residual) {
  ProofReport r;
  r.id = std::move(id);
  r.witness = f2::find_witness(residual);
  r.proven = residual.is_zero();
  r.residual = std::move(residual);
  return r;
}

}  // namespace detail

/// κ + κ' + ε + 1 + ν with dim M substituted; proven iff the ANF vanishes.
inline ProofReport prove_master_identity(int k, int j, int k_inner, const SignFormulas& f = {},
                                         ProofOptions opt = {}) {
  detail::check_instance(k, j, k_inner);
  Instance in(f, k, j, k_inner);
  auto r = detail::finish(detail::instance_id("master", k, j, k_inner),
                          in.kappa() + in.kappa_prime() + in.eps() + F2Poly::one() + in.nu());
  if (opt.truth_table) {
    r.truth_table_checked = true;
    r.truth_table_agrees = detail::truth_table(r.residual, k, j, k_inner, signs::master_defect);
  }
  return r;
}

/// κ ≡ δ1 + δ2 + δ3 with δ2 = γ1 + γ2.
inline ProofReport prove_kappa_decomposition(int k, int j, int k_inner, const SignFormulas& f = {},
                                             ProofOptions opt = {}) {
  detail::check_instance(k, j, k_inner);
  Instance in(f, k, j, k_inner);
  auto r = detail::finish(detail::instance_id("kappa=d1+d2+d3", k, j, k_inner),
                          in.kappa() + in(f.delta1) + in(f.gamma1) + in(f.gamma2) + in(f.delta3));
  if (opt.truth_table) {
    r.truth_table_checked = true;
    r.truth_table_agrees = detail::truth_table(r.residual, k, j, k_inner, [](const signs::SignContext& c) {
      return parity(signs::kappa(c) + signs::delta1(c) + signs::delta2(c) + signs::delta3(c));
    });
  }
  return r;
}

/// κ' ≡ δ4 + δ5.
inline ProofReport prove_kappa_prime_decomposition(int k, int j, int k_inner, const SignFormulas& f = {},
                                                   ProofOptions opt = {}) {
  detail::check_instance(k, j, k_inner);
  Instance in(f, k, j, k_inner);
  auto r = detail::finish(detail::instance_id("kappa'=d4+d5", k, j, k_inner),
                          in.kappa_prime() + in.delta4() + in(f.delta5));
  if (opt.truth_table) {
    r.truth_table_checked = true;
    r.truth_table_agrees = detail::truth_table(r.residual, k, j, k_inner, [](const signs::SignContext& c) {
      return parity(signs::kappa_prime(c) + signs::delta4(c) + signs::delta5(c));
    });
  }
  return r;
}

/// η1 + η2 ≡ δ5.
inline ProofReport prove_eta_collapse(int k, int j, int k_inner, const SignFormulas& f = {}) {
  detail::check_instance(k, j, k_inner);
  Instance in(f, k, j, k_inner);
  return detail::finish(detail::instance_id("eta1+eta2=d5", k, j, k_inner), in(f.eta1) + in(f.eta2) + in(f.delta5));
}

/// Σ_{p<j}|ξ_p|' + ε(…, deg ξ_j + 1, …) ≡ Σ_{p<j} deg ξ_p + ε + 1.
inline ProofReport prove_rel2_congruence(int k, int j, const SignFormulas& f = {}, ProofOptions opt = {}) {
  if (k < 1 || j < 1 || j > k) throw InvalidArgument("rel2 needs 1 <= j <= k");
  Instance in(f, k, j, 1);
  const std::string dj = "d" + std::to_string(j);
  F2Poly shifted = in.with(f.eps, {{dj, F2Poly::var(dj) + F2Poly::one()}});
  auto r = detail::finish(detail::instance_id("rel2", k, j, -1),
                          in(f.koszul) + shifted + in(f.deg_prefix) + in.eps() + F2Poly::one());
  if (opt.truth_table) {
    r.truth_table_checked = true;
    r.truth_table_agrees = detail::truth_table(r.residual, k, j, 1, [j](const signs::SignContext& c) {
      auto bumped = c.degs;
      bumped[j - 1] += 1;
      long long prefix = 0;
      for (int p = 0; p < j - 1; ++p) prefix += c.degs[p];
      return parity(signs::koszul_prefix(c.degs, c.mus, j) + signs::epsilon(bumped, c.mus) + prefix +
                    signs::epsilon(c.degs, c.mus) + 1);
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Formal replay of the A∞ relation at (k, B).

enum class TermKind { D_PUSH, PUSH_D, BDRY };

inline const char* to_string(TermKind t) {
  switch (t) {
    case TermKind::D_PUSH:
      return "D_PUSH";
    case TermKind::PUSH_D:
      return "PUSH_D";
    case TermKind::BDRY:
      return "BDRY";
  }
  return "?";
}

struct FormalTerm {
  TermKind kind = TermKind::BDRY;
  std::string key;     // identifies the geometric term, e.g. "B=1:PUSH_D[j=2]"
  std::string origin;  // which relation produced it
  F2Poly sign;
};

struct CancelledPair {
  std::string key;
  FormalTerm a, b;
};

struct ResidualTerm {
  std::string key;
  std::vector<FormalTerm> terms;
  std::optional<Assignment> witness;  // parities where the signs fail to cancel
};

struct TheoremReport {
  int k = 0;
  std::vector<Rational> energies;
  bool aborted = false;
  std::string diagnostic;
  std::vector<FormalTerm> rewritten;  // D_PUSH terms replaced through Stokes
  std::vector<CancelledPair> cancelled;
  std::vector<ResidualTerm> residual;
  bool ok() const { return !aborted && residual.empty(); }
};

struct TheoremOptions {
  SignFormulas formulas;
  std::optional<std::string> flip_term;  // add 1 to the sign of the first term with this key
};

namespace detail {

inline std::string bdry_key(const Rational& e, const strata::BoundaryStratum& s) {
  return "B=" + bmsign::to_string(e) + ":BDRY[j=" + std::to_string(s.j) + ",k'=" + std::to_string(s.outer.k) +
         ",B'=" + bmsign::to_string(s.outer.B.energy) + ",k''=" + std::to_string(s.inner.k) +
         ",B''=" + bmsign::to_string(s.inner.B.energy) + ",node=" + s.node.name + "]";
}

inline std::string push_key(const Rational& e, int j) {
  return "B=" + bmsign::to_string(e) + ":PUSH_D[j=" + std::to_string(j) + "]";
}

}  // namespace detail

/// Expands every relation (k, B), B in the spectrum, into D_PUSH / PUSH_D / BDRY
/// terms and checks that they cancel in pairs. (k,B) = (1,0) is d∘d and
/// (0,0) is m_{0,0} = 0; both are skipped.
inline TheoremReport prove_theorem(int k, const novikov::GappedSpectrum& spectrum, const TheoremOptions& opt = {}) {
  if (k < 0) throw InvalidArgument("k must be >= 0");
  const SignFormulas& f = opt.formulas;
  TheoremReport rep;
  rep.k = k;
  rep.energies = spectrum.levels();

  // Prerequisites at this arity.
  for (int k2 = 0; k2 <= k + 1; ++k2)
    for (int j = 1; j <= k + 1 - k2; ++j) {
      auto m = prove_master_identity(k, j, k2, f);
      if (!m.proven) {
        rep.aborted = true;
        rep.diagnostic = "prerequisite " + m.id + " not proven; residual " + m.residual.to_string();
        return rep;
      }
    }
  for (int j = 1; j <= k; ++j) {
    auto r = prove_rel2_congruence(k, j, f);
    if (!r.proven) {
      rep.aborted = true;
      rep.diagnostic = "prerequisite " + r.id + " not proven; residual " + r.residual.to_string();
      return rep;
    }
  }

  const auto table = strata::ComponentTable::synthetic(k);
  std::vector<FormalTerm> terms;
  for (const auto& e : spectrum.levels()) {
    if (e == 0 && (k == 0 || k == 1)) continue;
    const Instance base(f, k, 1, k > 0 ? 1 : 0);
    const F2Poly eps = base.eps(), nu = base.nu();

    // d∘m_{k,B}: the k'=1, B'=0 term, then Stokes.
    rep.rewritten.push_back({TermKind::D_PUSH, "B=" + bmsign::to_string(e) + ":D_PUSH", "rel1", eps});
    for (int j = 1; j <= k; ++j) {
      Instance in(f, k, j, 1);
      terms.push_back({TermKind::PUSH_D, detail::push_key(e, j), "rel1/Stokes", eps + in(f.deg_prefix)});
    }
    const auto strata = strata::nonvanishing(strata::enumerate_strata(k, {e, ""}, spectrum, table));
    for (const auto& s : strata) terms.push_back({TermKind::BDRY, detail::bdry_key(e, s), "rel1/Stokes", eps + nu});

    // m_{k,B}(…, d ξ_j, …): the k''=1, B''=0 term.
    for (int j = 1; j <= k; ++j) {
      Instance in(f, k, j, 1);
      const std::string dj = "d" + std::to_string(j);
      F2Poly sign = in(f.koszul) + in.with(f.eps, {{dj, F2Poly::var(dj) + F2Poly::one()}});
      terms.push_back({TermKind::PUSH_D, detail::push_key(e, j), "rel2", sign});
    }

    // Remaining compositions, one per stratum, with κ' from the δ4 + δ5 derivation.
    for (const auto& s : strata) {
      Instance in(f, k, s.j, s.inner.k);
      F2Poly sign = in.kappa() + in.delta4() + in(f.delta5);
      terms.push_back({TermKind::BDRY, detail::bdry_key(e, s), "rel3", sign});
    }
  }

  if (opt.flip_term) {
    for (auto& t : terms)
      if (t.key == *opt.flip_term) {
        t.sign += F2Poly::one();
        break;
      }
  }

  std::map<std::string, std::vector<FormalTerm>> groups;
  std::vector<std::string> order;
  for (auto& t : terms) {
    if (!groups.count(t.key)) order.push_back(t.key);
    groups[t.key].push_back(std::move(t));
  }
  for (const auto& key : order) {
    auto& g = groups[key];
    if (g.size() == 2) {
      F2Poly r = g[0].sign + g[1].sign + F2Poly::one();
      if (r.is_zero()) {
        rep.cancelled.push_back({key, g[0], g[1]});
        continue;
      }
      rep.residual.push_back({key, g, f2::find_witness(r)});
    } else {
      rep.residual.push_back({key, g, std::nullopt});
    }
  }
  return rep;
}

}  // namespace bmsign::prover
