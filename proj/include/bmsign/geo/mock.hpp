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

// Mock moduli spaces: a space X with an output projection ev_0 and input maps
// ev_1..ev_k, acting by m_k(ξ) = (−1)^ε (ev_0)_!(ev_1^*ξ_1 ∧ … ∧ ev_k^*ξ_k).

#pragma once

#include <bmsign/geo/correspondence.hpp>
#include <bmsign/signs.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bmsign::geo {

struct MockModuli {
  ProjectionMap ev0;               // X -> R_0
  std::vector<SmoothMapModel> ev;  // X -> R_i, i = 1..k
  std::vector<long long> mus;      // μ(R_i)
  long long mu_out = 0;            // μ(R_0)

  const Space& X() const { return ev0.source(); }
  int k() const { return static_cast<int>(ev.size()); }

  void validate() const {
    if (mus.size() != ev.size()) throw InvalidArgument("mock: one Maslov parity per input leg");
    for (const auto& e : ev)
      if (!(e.source() == X())) throw InvalidArgument("mock: input legs must start at X");
  }

  /// μ(R_0) making dim X agree mod 2 with the moduli dimension formula.
  static long long consistent_mu_out(int reldim, const std::vector<long long>& mus) {
    long long s = reldim - static_cast<long long>(mus.size()) + 2;
    for (long long m : mus) s += m;
    return parity(s);
  }

  bool dimension_consistent() const { return parity(mu_out) == consistent_mu_out(ev0.reldim(), mus); }
};

/// (ev_0)_!(ev_1^*ξ_1 ∧ … ∧ ev_k^*ξ_k), no sign.
inline Form mock_push_pull(const MockModuli& m, const std::vector<Form>& xs) {
  m.validate();
  if (static_cast<int>(xs.size()) != m.k()) throw InvalidArgument("mock: wrong number of inputs");
  Form w = Form::constant(m.X(), 1);
  for (int i = 0; i < m.k() && !w.is_zero(); ++i) w = wedge(w, pullback(m.ev[i], xs[i]));
  return pushforward(m.ev0, w);
}

/// (−1)^{ε(ξ)} (ev_0)_!(…). Degrees come from the forms unless given (needed for zero inputs).
inline Form mock_mk(const MockModuli& m, const std::vector<Form>& xs, std::optional<std::vector<long long>> degs = {}) {
  if (!degs) {
    degs.emplace();
    for (const auto& x : xs) {
      auto dg = x.degree();
      if (!dg) {
        if (x.is_zero()) return Form(m.ev0.target());
        throw InvalidArgument("mock_mk needs homogeneous inputs");
      }
      degs->push_back(*dg);
    }
  }
  const Parity e = signs::epsilon(*degs, m.mus);
  Form out = mock_push_pull(m, xs);
  return e ? -out : out;
}

struct PushPullResult {
  bool passed = true;
  bool nontrivial = false;  // the fiber-product side is nonzero
  Parity delta5 = 0;
  Parity kappa_prime = 0;
  std::string witness;
};

/// Fiber product of the inner ev_0 with the outer ev_j: legs and output projection.
struct GluedMock {
  BaseChange bc;
  ProjectionMap out;
  std::vector<SmoothMapModel> legs;  // outer legs before j, inner legs, outer legs after j
};

inline GluedMock glue(const MockModuli& outer, const MockModuli& inner, int j) {
  if (j < 1 || j > outer.k()) throw InvalidArgument("glue: slot out of range");
  if (!(inner.ev0.target() == outer.ev[j - 1].target())) throw InvalidArgument("glue: node spaces differ");
  GluedMock g{base_change(inner.ev0, outer.ev[j - 1]), {}, {}};
  g.out = compose(outer.ev0, g.bc.pbar);
  for (int i = 0; i < j - 1; ++i) g.legs.push_back(compose(outer.ev[i], g.bc.pbar));
  for (const auto& e : inner.ev) g.legs.push_back(compose(e, g.bc.ftilde));
  for (int i = j; i < outer.k(); ++i) g.legs.push_back(compose(outer.ev[i], g.bc.pbar));
  return g;
}

/// Nested push-pull against the fiber-product push-pull:
///   (ev'_0)_!(…, ev'_j^*(ev''_0)_!(…), …) = (−1)^{δ₅} (ev'_0 ∘ π')_!(π^*… ∧ π''^*… ∧ π^*…)
/// and, with all ε signs and the Koszul prefix, the same with (−1)^{κ'}.
/// `shift` is added to both exponents (a nonzero shift must be detected).
inline PushPullResult check_pushpull_identities(const MockModuli& outer, const MockModuli& inner, int j,
                                               const std::vector<Form>& xs, int shift = 0) {
  outer.validate();
  inner.validate();
  const int k1 = outer.k(), k2 = inner.k(), k = k1 + k2 - 1;
  if (static_cast<int>(xs.size()) != k) throw InvalidArgument("pushpull: wrong number of inputs");
  if (parity(outer.mus.at(j - 1)) != parity(inner.mu_out)) throw InvalidArgument("pushpull: node Maslov parities differ");
  if (!outer.dimension_consistent() || !inner.dimension_consistent())
    throw InvalidArgument("pushpull: Maslov data disagrees with the fiber dimension");

  signs::SignContext c;
  c.k = k;
  c.j = j;
  c.k_outer = k1;
  c.k_inner = k2;
  for (const auto& x : xs) {
    auto dg = x.degree();
    if (!dg && !x.is_zero()) throw InvalidArgument("pushpull needs homogeneous inputs");
    c.degs.push_back(dg.value_or(0));
  }
  for (int i = 0; i < j - 1; ++i) c.mus.push_back(outer.mus[i]);
  for (long long m : inner.mus) c.mus.push_back(m);
  for (int i = j; i < k1; ++i) c.mus.push_back(outer.mus[i]);
  c.mu_node = inner.mu_out;
  c.mu_out = outer.mu_out;
  c.dim_out = outer.ev0.target().dim();
  c.dim_node = inner.ev0.target().dim();

  PushPullResult r;
  r.delta5 = signs::delta5(c);
  r.kappa_prime = signs::kappa_prime(c);

  std::vector<Form> mid(xs.begin() + (j - 1), xs.begin() + (j - 1 + k2));
  GluedMock g = glue(outer, inner, j);
  Form w = Form::constant(g.bc.product, 1);
  for (int i = 0; i < k && !w.is_zero(); ++i) w = wedge(w, pullback(g.legs[i], xs[i]));
  const Form fp = pushforward(g.out, w);
  r.nontrivial = !fp.is_zero();

  auto word = [&](const Form& inner_out) {
    std::vector<Form> v(xs.begin(), xs.begin() + (j - 1));
    v.push_back(inner_out);
    v.insert(v.end(), xs.begin() + (j - 1 + k2), xs.end());
    return v;
  };
  const Form nested = mock_push_pull(outer, word(mock_push_pull(inner, mid)));
  const Form expect_nested = parity(r.delta5 + shift) ? -fp : fp;

  std::vector<long long> inner_degs(c.degs.begin() + (j - 1), c.degs.begin() + (j - 1 + k2));
  long long inner_out_deg = -inner.ev0.reldim();
  for (long long x : inner_degs) inner_out_deg += x;
  std::vector<long long> outer_degs(c.degs.begin(), c.degs.begin() + (j - 1));
  outer_degs.push_back(inner_out_deg);
  outer_degs.insert(outer_degs.end(), c.degs.begin() + (j - 1 + k2), c.degs.end());
  Form full = mock_mk(outer, word(mock_mk(inner, mid, inner_degs)), outer_degs);
  if (signs::koszul_prefix(c.degs, c.mus, j)) full = -full;
  const Form expect_full = parity(r.kappa_prime + shift) ? -fp : fp;

  r.passed = nested == expect_nested && full == expect_full;
  if (!r.passed)
    r.witness = "j=" + std::to_string(j) + " k'=" + std::to_string(k1) + " k''=" + std::to_string(k2) +
                " outer X=" + outer.X().to_string() + " inner X=" + inner.X().to_string() + " nested=" + nested.to_string() +
                " fiber-product=" + fp.to_string() + " delta5=" + std::to_string(r.delta5) +
                " kappa'=" + std::to_string(r.kappa_prime);
  return r;
}

}  // namespace bmsign::geo
