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

// Randomized checks of the push-pull calculus on cube-torus models.

#pragma once

#include <bmsign/geo/mock.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bmsign::geo {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 500;
  int max_coords = 4;
  int max_poly_deg = 3;
};

struct CheckResult {
  std::string id;
  bool passed = true;
  int trials = 0;
  int nontrivial = 0;  // trials where the compared sides (or, for Stokes, the boundary term) were nonzero
  int odd_sign = 0;    // mock_pushpull only: nontrivial trials with δ₅ odd
  std::string witness;
};

/// Random spaces, forms, maps and projections.
class RandomModel {
 public:
  explicit RandomModel(std::uint64_t seed, int max_poly_deg = 3) : rng_(seed), max_deg_(max_poly_deg) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(int num = 1, int den = 2) { return uniform(0, den - 1) < num; }

  Space space(int min_dim, int max_dim) {
    Space s;
    const int n = uniform(min_dim, std::max(min_dim, max_dim));
    for (int i = 0; i < n; ++i)
      s.coords.push_back({fresh_name(), coin(2, 3) ? CoordKind::Interval : CoordKind::Circle});
    return s;
  }

  /// Polynomial in the interval coordinates of s.
  Poly poly(const Space& s) {
    std::vector<int> iv;
    for (int i = 0; i < s.dim(); ++i)
      if (s.is_interval(i)) iv.push_back(i);
    Poly p(s.dim());
    const int nterms = uniform(1, 3);
    for (int t = 0; t < nterms; ++t) {
      Poly::Exponents e(s.dim(), 0);
      if (!iv.empty()) {
        const int deg = uniform(0, max_deg_);
        for (int u = 0; u < deg; ++u) ++e[iv[uniform(0, static_cast<int>(iv.size()) - 1)]];
      }
      p = p + Poly::monomial(e, frac(uniform(-4, 4), uniform(1, 3)));
    }
    return p;
  }

  /// Homogeneous form of degree deg (a random degree when deg < 0); never zero unless no such form exists.
  Form form(const Space& s, int deg = -1) {
    const int n = s.dim();
    if (deg < 0) deg = uniform(0, n);
    Form out(s);
    if (deg > n) return out;
    std::vector<Mask> masks;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (std::popcount(m) == deg) masks.push_back(m);
    while (out.is_zero())
      for (Mask m : masks)
        if (coin()) out.add_term(m, poly(s));
    return out;
  }

  /// Mixed-degree form.
  Form mixed_form(const Space& s) {
    Form out(s);
    for (int k = 0; k <= s.dim(); ++k)
      if (coin()) out += form(s, k);
    return out;
  }

  /// M = N interleaved with a random fiber F, projected to N, with a random fiber sign.
  ProjectionMap bundle(const Space& n, int min_fiber, int max_fiber) {
    Space f = space(min_fiber, max_fiber);
    std::vector<int> slots(n.dim() + f.dim());
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng_);
    Space m;
    m.coords.resize(slots.size());
    std::vector<int> inj(n.dim());
    for (int a = 0; a < n.dim(); ++a) {
      m.coords[slots[a]] = n.coords[a];
      inj[a] = slots[a];
    }
    for (int q = 0; q < f.dim(); ++q) m.coords[slots[n.dim() + q]] = f.coords[q];
    return {m, n, inj, coin(1, 4) ? -1 : 1};
  }

  /// Smooth map s -> n: circles go to ± a source circle or a constant; intervals go to
  /// a source coordinate or a convex combination of products of x and (1 - x) factors.
  /// Unused source coordinates are drawn first, those in `prefer` before the rest, so
  /// pullbacks of top forms cover fibers more often.
  SmoothMapModel map(const Space& s, const Space& n, const std::vector<int>& prefer = {}) {
    std::vector<int> iv, cv, iv_pool, cv_pool;
    for (int i = 0; i < s.dim(); ++i) (s.is_interval(i) ? iv : cv).push_back(i);
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<int> ip, cp;
      for (int i = 0; i < s.dim(); ++i) {
        const bool preferred = std::find(prefer.begin(), prefer.end(), i) != prefer.end();
        if (preferred == (pass == 1)) (s.is_interval(i) ? ip : cp).push_back(i);
      }
      std::shuffle(ip.begin(), ip.end(), rng_);
      std::shuffle(cp.begin(), cp.end(), rng_);
      iv_pool.insert(iv_pool.end(), ip.begin(), ip.end());
      cv_pool.insert(cv_pool.end(), cp.begin(), cp.end());
    }
    auto preferred_left = [&](const std::vector<int>& pool) {
      return !pool.empty() && std::find(prefer.begin(), prefer.end(), pool.back()) != prefer.end();
    };
    auto pick = [&](std::vector<int>& pool, const std::vector<int>& all) {
      if (pool.empty()) return all[uniform(0, static_cast<int>(all.size()) - 1)];
      int x = pool.back();
      pool.pop_back();
      return x;
    };
    std::vector<CoordImage> im;
    for (int a = 0; a < n.dim(); ++a) {
      CoordImage c;
      if (!n.is_interval(a)) {
        if (preferred_left(cv_pool) || (!cv.empty() && !coin(1, 5))) {
          c.kind = CoordImage::Kind::CircleCoord;
          c.source = pick(cv_pool, cv);
          c.sign = coin() ? 1 : -1;
        } else {
          c.value = frac(uniform(0, 3), 4);
        }
      } else if (iv.empty() || (!preferred_left(iv_pool) && coin(1, 6))) {
        c.value = frac(uniform(0, 4), 4);
      } else if (coin()) {
        c = SmoothMapModel::coordinate_image(s, pick(iv_pool, iv));
      } else {
        c.kind = CoordImage::Kind::Polynomial;
        c.poly = bounded_poly(s, iv, pick(iv_pool, iv));
      }
      im.push_back(std::move(c));
    }
    return {s, n, std::move(im)};
  }

  /// Fresh coordinates copying the kinds of x at the given positions.
  Space like(const Space& x, const std::vector<int>& idx) {
    Space s;
    for (int i : idx) s.coords.push_back({fresh_name(), x.coords.at(i).kind});
    return s;
  }

  /// Target for a leg out of p.source(): copies of the kinds of `cover` (the whole fiber by
  /// default) plus up to `extra` base kinds, shuffled.
  Space fiber_like(const ProjectionMap& p, int extra, std::optional<std::vector<int>> cover = {}) {
    std::vector<int> idx = cover ? *cover : p.fiber();
    std::vector<int> base = p.injection();
    std::shuffle(base.begin(), base.end(), rng_);
    base.resize(std::min<std::size_t>(base.size(), uniform(0, std::max(0, extra))));
    idx.insert(idx.end(), base.begin(), base.end());
    std::shuffle(idx.begin(), idx.end(), rng_);
    return like(p.source(), idx);
  }

  /// Homogeneous form of top or next-to-top degree most of the time.
  Form rich_form(const Space& s) {
    if (coin(1, 4)) return form(s);
    return form(s, uniform(std::max(0, s.dim() - 1), s.dim()));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  static Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  std::string fresh_name() { return "x" + std::to_string(counter_++); }

  Poly bounded_poly(const Space& s, const std::vector<int>& iv, int anchor) {
    const int pieces = uniform(1, 2);
    std::vector<int> w(pieces);
    int total = 0;
    for (auto& x : w) total += (x = uniform(1, 3));
    Poly out(s.dim());
    for (int t = 0; t < pieces; ++t) {
      Poly prod = Poly::constant(s.dim(), frac(w[t], total));
      const int deg = uniform(1, std::max(1, max_deg_));
      for (int u = 0; u < deg; ++u) {
        Poly x = Poly::var(s.dim(), u == 0 ? anchor : iv[uniform(0, static_cast<int>(iv.size()) - 1)]);
        prod = prod * (coin() ? x : Poly::constant(s.dim(), 1) - x);
      }
      out = out + prod;
    }
    return out;
  }

  std::mt19937_64 rng_;
  int max_deg_;
  int counter_ = 0;
};

namespace detail {

inline Form pull(const ProjectionMap& p, const Form& theta) { return pullback(p.as_map(), theta); }

inline Form sign_pow(int e, const Form& f) { return (e & 1) ? -f : f; }

inline void record(CheckResult& r, bool ok, bool nontrivial, const std::string& witness) {
  ++r.trials;
  if (nontrivial) ++r.nontrivial;
  if (!ok && r.passed) {
    r.passed = false;
    r.witness = witness;
  }
}

inline std::string show(const std::string& label, const Form& f) { return label + "=" + f.to_string() + "; "; }

}  // namespace detail

/// p_!(p^*θ ∧ β) = θ ∧ p_!β.
inline CheckResult verify_projection_formula(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x11, o.max_poly_deg);
  CheckResult r{"projection_formula"};
  for (int t = 0; t < o.trials; ++t) {
    Space n = g.space(0, o.max_coords - 1);
    ProjectionMap p = g.bundle(n, 1, o.max_coords - n.dim());
    Form theta = g.mixed_form(n), beta = g.mixed_form(p.source());
    Form lhs = pushforward(p, wedge(detail::pull(p, theta), beta));
    Form rhs = wedge(theta, pushforward(p, beta));
    detail::record(r, lhs == rhs, !lhs.is_zero(),
                   p.to_string() + "; " + detail::show("theta", theta) + detail::show("beta", beta) + detail::show("lhs", lhs) +
                       detail::show("rhs", rhs));
  }
  return r;
}

/// (q ∘ p)_! = q_! ∘ p_!, and the same after pulling θ back along p.
inline CheckResult verify_functoriality(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x22, o.max_poly_deg);
  CheckResult r{"functoriality"};
  for (int t = 0; t < o.trials; ++t) {
    Space pspace = g.space(0, std::max(0, o.max_coords - 2));
    ProjectionMap q = g.bundle(pspace, 0, std::max(0, o.max_coords - 1 - pspace.dim()));
    ProjectionMap p = g.bundle(q.source(), 0, std::max(0, o.max_coords - q.source().dim()));
    Form beta = g.mixed_form(p.source()), theta = g.mixed_form(q.source());
    ProjectionMap qp = compose(q, p);
    Form a1 = pushforward(qp, beta), b1 = pushforward(q, pushforward(p, beta));
    Form a2 = pushforward(qp, wedge(detail::pull(p, theta), beta)), b2 = pushforward(q, wedge(theta, pushforward(p, beta)));
    detail::record(r, a1 == b1 && a2 == b2, !a1.is_zero() || !a2.is_zero(),
                   p.to_string() + " then " + q.to_string() + "; " + detail::show("beta", beta) + detail::show("composite", a1) +
                       detail::show("iterated", b1));
  }
  return r;
}

/// f^* p_! β = p̄_! f̃^* β for the base change of p along f.
inline CheckResult verify_base_change(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x33, o.max_poly_deg);
  CheckResult r{"base_change"};
  for (int t = 0; t < o.trials; ++t) {
    Space n = g.space(0, std::max(0, o.max_coords - 2));
    ProjectionMap p = g.bundle(n, 1, std::max(1, o.max_coords - n.dim()));
    Space s = g.space(0, std::max(0, o.max_coords - p.reldim()));
    SmoothMapModel f = g.map(s, n);
    BaseChange bc = base_change(p, f);
    Form beta = g.mixed_form(p.source());
    Form lhs = pullback(f, pushforward(p, beta));
    Form rhs = pushforward(bc.pbar, pullback(bc.ftilde, beta));
    detail::record(r, lhs == rhs, !lhs.is_zero(),
                   p.to_string() + "; f=" + f.to_string() + "; " + detail::show("beta", beta) + detail::show("lhs", lhs) +
                       detail::show("rhs", rhs));
  }
  return r;
}

/// d p_!β = p_! dβ + (−1)^{dim M + deg β} (p|∂)_! β for homogeneous β.
inline CheckResult verify_stokes(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x44, o.max_poly_deg);
  CheckResult r{"stokes"};
  for (int t = 0; t < o.trials; ++t) {
    Space n = g.space(0, o.max_coords - 1);
    ProjectionMap p = g.bundle(n, 1, o.max_coords - n.dim());
    const int deg = g.uniform(std::max(0, p.reldim() - 1), p.source().dim());
    Form beta = g.form(p.source(), deg);
    Form bd = boundary_pushforward(p, beta);
    Form lhs = d(pushforward(p, beta));
    Form rhs = pushforward(p, d(beta)) + detail::sign_pow(p.source().dim() + deg, bd);
    detail::record(r, lhs == rhs, !vertical_boundary(p).empty() && !bd.is_zero(),
                   p.to_string() + "; " + detail::show("beta", beta) + detail::show("d p_! beta", lhs) +
                       detail::show("p_! d beta + bdry", rhs));
  }
  return r;
}

/// d Corr(ξ) = Corr(dξ) + (−1)^{dim X + deg ξ} Corr_∂(ξ).
inline CheckResult verify_corr_stokes(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x55, o.max_poly_deg);
  CheckResult r{"corr_stokes"};
  for (int t = 0; t < o.trials; ++t) {
    Space n1 = g.space(0, o.max_coords - 1);
    ProjectionMap f1 = g.bundle(n1, 1, o.max_coords - n1.dim());
    Space n2 = g.coin(1, 4) ? g.space(0, o.max_coords) : g.fiber_like(f1, o.max_coords - f1.reldim());
    CorrespondenceModel c{f1.source(), f1, g.map(f1.source(), n2, f1.fiber())};
    Form xi = g.rich_form(n2);
    const int deg = xi.degree().value_or(0);
    Form bd = corr_boundary(c, xi);
    Form lhs = d(corr_apply(c, xi));
    Form rhs = corr_apply(c, d(xi)) + detail::sign_pow(c.X.dim() + deg, bd);
    detail::record(r, lhs == rhs, !bd.is_zero(),
                   f1.to_string() + "; f2=" + c.f2.to_string() + "; " + detail::show("xi", xi) + detail::show("lhs", lhs) +
                       detail::show("rhs", rhs));
  }
  return r;
}

/// Corr_{X12 ×_{N2} X23} = Corr_{X12} ∘ Corr_{X23}.
inline CheckResult verify_composition(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x66, o.max_poly_deg);
  CheckResult r{"composition"};
  for (int t = 0; t < o.trials; ++t) {
    Space n1 = g.space(0, 2);
    ProjectionMap f1 = g.bundle(n1, 0, std::max(0, o.max_coords - n1.dim()));
    Space n2 = g.coin(1, 4) ? g.space(0, 2) : g.fiber_like(f1, 1);
    CorrespondenceModel c12{f1.source(), f1, g.map(f1.source(), n2, f1.fiber())};
    ProjectionMap g1 = g.bundle(n2, 0, std::max(0, o.max_coords - n2.dim()));
    Space n3 = g.coin(1, 4) ? g.space(0, 2) : g.fiber_like(g1, 1);
    CorrespondenceModel c23{g1.source(), g1, g.map(g1.source(), n3, g1.fiber())};
    Form xi = g.mixed_form(n3) + g.rich_form(n3);
    Form lhs = corr_apply(fiber_product(c12, c23), xi);
    Form rhs = corr_apply(c12, corr_apply(c23, xi));
    detail::record(r, lhs == rhs, !lhs.is_zero(),
                   "X12: " + f1.to_string() + "; X23: " + g1.to_string() + "; " + detail::show("xi", xi) +
                       detail::show("composite", lhs) + detail::show("iterated", rhs));
  }
  return r;
}

/// Sign of the induced orientation ω_N ∧ σ ω_F of M relative to its coordinate order.
inline int induced_orientation(const ProjectionMap& p) {
  std::vector<int> order(p.injection());
  order.insert(order.end(), p.fiber().begin(), p.fiber().end());
  return (detail::permutation_parity(order) ? -1 : 1) * p.fiber_sign();
}

/// ∫_M p^*α ∧ β = ∫_N α ∧ p_!β with M carrying the induced orientation.
inline CheckResult verify_defining_property(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x77, o.max_poly_deg);
  CheckResult r{"defining_property"};
  for (int t = 0; t < o.trials; ++t) {
    Space n = g.space(0, o.max_coords - 1);
    ProjectionMap p = g.bundle(n, 1, o.max_coords - n.dim());
    const int db = g.uniform(p.reldim(), p.source().dim());
    Form beta = g.form(p.source(), db);
    Form alpha = g.form(n, p.source().dim() - db);
    Rational lhs = integrate(wedge(detail::pull(p, alpha), beta), induced_orientation(p));
    Rational rhs = integrate(wedge(alpha, pushforward(p, beta)));
    detail::record(r, lhs == rhs, lhs != 0,
                   p.to_string() + "; " + detail::show("alpha", alpha) + detail::show("beta", beta) + "lhs=" + lhs.get_str() +
                       " rhs=" + rhs.get_str());
  }
  return r;
}

/// d² = 0, Leibniz, graded commutativity, and pullback as a dg-algebra map.
inline CheckResult verify_form_algebra(const VerifyOptions& o) {
  RandomModel g(o.seed ^ 0x88, o.max_poly_deg);
  CheckResult r{"form_algebra"};
  for (int t = 0; t < o.trials; ++t) {
    Space n = g.space(1, o.max_coords);
    Space s = g.space(0, o.max_coords);
    SmoothMapModel f = g.map(s, n);
    const int da = g.uniform(0, n.dim()), db = g.uniform(0, n.dim());
    Form a = g.form(n, da), b = g.form(n, db);
    bool ok = d(d(a)).is_zero();
    ok = ok && d(wedge(a, b)) == wedge(d(a), b) + detail::sign_pow(da, wedge(a, d(b)));
    ok = ok && wedge(a, b) == detail::sign_pow(da * db, wedge(b, a));
    ok = ok && pullback(f, wedge(a, b)) == wedge(pullback(f, a), pullback(f, b));
    ok = ok && pullback(f, d(a)) == d(pullback(f, a));
    detail::record(r, ok, !wedge(a, b).is_zero(),
                   "f=" + f.to_string() + "; " + detail::show("a", a) + detail::show("b", b));
  }
  return r;
}

/// Random pairs of mock moduli glued at a node, checked with check_pushpull_identities.
/// `shift` is passed through; any nonzero shift should make the check fail.
inline CheckResult verify_mock_pushpull(const VerifyOptions& o, int shift = 0) {
  RandomModel g(o.seed ^ 0x99, o.max_poly_deg);
  CheckResult r{"mock_pushpull"};
  for (int t = 0; t < o.trials; ++t) {
    // Half the trials are biased towards δ₅ odd with a nonzero result: odd inner fiber,
    // a trailing outer input, legs covering the fibers exactly with top-degree inputs.
    const bool biased = g.coin();
    std::vector<Form> xs_before, xs_inner, xs_after;
    auto leg = [&](const ProjectionMap& ev0, const std::vector<int>& cover, std::vector<long long>& mus,
                   std::vector<Form>& xs) {
      Space target = !biased && g.coin(1, 4) ? g.space(0, 2) : g.fiber_like(ev0, biased ? 0 : g.uniform(0, 1), cover);
      mus.push_back(g.uniform(0, 3));
      xs.push_back(biased ? g.form(target, target.dim()) : g.rich_form(target));
      return g.map(ev0.source(), target, cover);
    };
    // Each fiber coordinate of ev0 goes to one slot in `slots`, whose leg then prefers it.
    auto split = [&](const ProjectionMap& ev0, int k, const std::vector<int>& slots) {
      std::vector<std::vector<int>> parts(k);
      for (std::size_t q = 0; q < ev0.fiber().size() && !slots.empty(); ++q)
        parts[q == 0 && biased ? slots.back() : slots[g.uniform(0, static_cast<int>(slots.size()) - 1)]].push_back(
            ev0.fiber()[q]);
      return parts;
    };

    // Inner polygon over the node space.
    Space node = g.space(0, 2);
    MockModuli inner;
    inner.ev0 = biased ? g.bundle(node, 1, 1) : g.bundle(node, 0, 2);
    const int k2 = biased ? g.uniform(1, 2) : g.uniform(0, 3);
    std::vector<int> inner_slots(k2);
    std::iota(inner_slots.begin(), inner_slots.end(), 0);
    auto inner_parts = split(inner.ev0, k2, inner_slots);
    for (int i = 0; i < k2; ++i) inner.ev.push_back(leg(inner.ev0, inner_parts[i], inner.mus, xs_inner));
    inner.mu_out = MockModuli::consistent_mu_out(inner.ev0.reldim(), inner.mus);

    // Outer polygon, slot j lands in the node.
    MockModuli outer;
    outer.ev0 = biased ? g.bundle(g.space(0, 2), 1, 2) : g.bundle(g.space(0, 2), 0, 2);
    const int k1 = biased ? g.uniform(2, 3) : g.uniform(std::max(1, 2 - k2), 3);
    const int j = biased ? g.uniform(1, k1 - 1) : g.uniform(1, k1);
    std::vector<int> outer_slots;
    for (int i = 0; i < k1; ++i)
      if (!biased || i != j - 1) outer_slots.push_back(i);
    auto outer_parts = split(outer.ev0, k1, outer_slots);
    for (int i = 1; i <= k1; ++i) {
      if (i != j) {
        outer.ev.push_back(leg(outer.ev0, outer_parts[i - 1], outer.mus, i < j ? xs_before : xs_after));
        continue;
      }
      outer.ev.push_back(g.map(outer.X(), node, biased ? outer.ev0.injection() : outer_parts[i - 1]));
      outer.mus.push_back(inner.mu_out + 2 * g.uniform(0, 1));
    }
    outer.mu_out = MockModuli::consistent_mu_out(outer.ev0.reldim(), outer.mus);

    std::vector<Form> xs = xs_before;
    xs.insert(xs.end(), xs_inner.begin(), xs_inner.end());
    xs.insert(xs.end(), xs_after.begin(), xs_after.end());
    PushPullResult res = check_pushpull_identities(outer, inner, j, xs, shift);
    detail::record(r, res.passed, res.nontrivial, res.witness);
    if (res.nontrivial && res.delta5) ++r.odd_sign;
  }
  return r;
}

/// Every geometric check at once.
inline std::vector<CheckResult> verify_geomodel(const VerifyOptions& o) {
  return {verify_form_algebra(o),  verify_projection_formula(o), verify_functoriality(o),
          verify_base_change(o),   verify_stokes(o),             verify_corr_stokes(o),
          verify_composition(o),   verify_defining_property(o),  verify_mock_pushpull(o)};
}

}  // namespace bmsign::geo
