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

// Smooth maps between cube-torus spaces, coordinate projections, pullback and
// integration along fibers.
//
// Fiber orientation: p_! reorders each term to (base generators in target
// order) ∧ (fiber generators in source order) before integrating the fiber, and
// multiplies by the projection's fiber_sign. A plain coordinate projection has
// fiber_sign = +1; composites and faces carry whatever sign keeps them equal
// to the iterated or induced orientation.

#pragma once

#include <bmsign/geo/form.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace bmsign::geo {

/// How one target coordinate is expressed on the source.
struct CoordImage {
  enum class Kind { CircleCoord, Constant, Polynomial };
  Kind kind = Kind::Constant;
  int source = -1;  // CircleCoord: source circle coordinate
  int sign = 1;     // CircleCoord: ±1 (orientation of the circle map)
  Poly poly;        // Polynomial: in the source variables (interval ones only)
  Rational value;   // Constant
};

class SmoothMapModel {
 public:
  SmoothMapModel() = default;
  SmoothMapModel(Space source, Space target, std::vector<CoordImage> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    validate();
  }

  static SmoothMapModel identity(const Space& s) {
    std::vector<CoordImage> im;
    for (int i = 0; i < s.dim(); ++i) im.push_back(coordinate_image(s, i));
    return {s, s, std::move(im)};
  }

  /// The image of target coordinate "x_i of source" (type taken from the source).
  static CoordImage coordinate_image(const Space& s, int i) {
    CoordImage c;
    if (s.is_interval(i)) {
      c.kind = CoordImage::Kind::Polynomial;
      c.poly = Poly::var(s.dim(), i);
    } else {
      c.kind = CoordImage::Kind::CircleCoord;
      c.source = i;
    }
    return c;
  }

  const Space& source() const noexcept { return source_; }
  const Space& target() const noexcept { return target_; }
  const std::vector<CoordImage>& images() const noexcept { return images_; }

  /// Pullback of the 1-form dy_a.
  Form coordinate_pullback(int a) const {
    const auto& im = images_.at(a);
    switch (im.kind) {
      case CoordImage::Kind::CircleCoord:
        return Rational(im.sign) * Form::coordinate(source_, im.source);
      case CoordImage::Kind::Constant:
        return Form(source_);
      case CoordImage::Kind::Polynomial:
        return d(Form::function(source_, im.poly));
    }
    return Form(source_);
  }

  /// f ∘ map for a coefficient polynomial on the target.
  Poly function_pullback(const Poly& f) const {
    std::vector<Poly> subs(target_.dim(), Poly(source_.dim()));
    for (int a = 0; a < target_.dim(); ++a) {
      const auto& im = images_[a];
      if (im.kind == CoordImage::Kind::Polynomial) subs[a] = im.poly;
      if (im.kind == CoordImage::Kind::Constant) subs[a] = Poly::constant(source_.dim(), im.value);
    }
    return f.compose(subs, source_.dim());
  }

  std::string to_string() const {
    std::string out = source_.to_string() + " -> " + target_.to_string() + " [";
    const auto names = source_.names();
    for (int a = 0; a < target_.dim(); ++a) {
      const auto& im = images_[a];
      out += (a ? ", " : "") + target_.coords[a].name + "=";
      if (im.kind == CoordImage::Kind::CircleCoord)
        out += (im.sign < 0 ? "-" : "") + names[im.source];
      else if (im.kind == CoordImage::Kind::Constant)
        out += im.value.get_str();
      else
        out += im.poly.to_string(names);
    }
    return out + "]";
  }

 private:
  void validate() const {
    if (static_cast<int>(images_.size()) != target_.dim()) throw InvalidArgument("map needs one image per target coordinate");
    for (int a = 0; a < target_.dim(); ++a) {
      const auto& im = images_[a];
      if (!target_.is_interval(a)) {
        if (im.kind == CoordImage::Kind::Polynomial) throw InvalidArgument("circle target needs a circle coordinate or a constant");
        if (im.kind == CoordImage::Kind::CircleCoord &&
            (im.source < 0 || im.source >= source_.dim() || source_.is_interval(im.source) || (im.sign != 1 && im.sign != -1)))
          throw InvalidArgument("circle target must come from a source circle coordinate with sign ±1");
        continue;
      }
      if (im.kind == CoordImage::Kind::CircleCoord) throw InvalidArgument("interval target cannot wind around a circle");
      if (im.kind == CoordImage::Kind::Constant) {
        if (im.value < 0 || im.value > 1) throw InvalidArgument("constant outside [0,1]");
        continue;
      }
      if (im.poly.nvars() != source_.dim()) throw InvalidArgument("image polynomial has the wrong ring");
      for (int i = 0; i < source_.dim(); ++i)
        if (!source_.is_interval(i) && im.poly.depends_on(i))
          throw InvalidArgument("image polynomial depends on a circle coordinate");
      check_bounds(im.poly);
    }
  }

  // Sample the cube on the grid {0, 1/3, 2/3, 1}.
  void check_bounds(const Poly& p) const {
    std::vector<int> iv;
    for (int i = 0; i < source_.dim(); ++i)
      if (source_.is_interval(i) && p.depends_on(i)) iv.push_back(i);
    std::vector<Rational> x(source_.dim(), Rational(0));
    std::vector<int> g(iv.size(), 0);
    for (;;) {
      for (std::size_t t = 0; t < iv.size(); ++t) {
        x[iv[t]] = Rational(g[t], 3);
        x[iv[t]].canonicalize();
      }
      Rational v = p.evaluate(x);
      if (v < 0 || v > 1) throw InvalidArgument("image polynomial leaves [0,1] at a sample point");
      std::size_t t = 0;
      for (; t < g.size(); ++t) {
        if (++g[t] <= 3) break;
        g[t] = 0;
      }
      if (t == g.size()) break;
    }
  }

  Space source_, target_;
  std::vector<CoordImage> images_;
};

inline Form pullback(const SmoothMapModel& f, const Form& b) {
  if (!(b.space() == f.target())) throw InvalidArgument("pullback: form does not live on the target");
  const int n = f.target().dim();
  std::vector<Form> dy;
  for (int a = 0; a < n; ++a) dy.push_back(f.coordinate_pullback(a));
  Form out(f.source());
  for (const auto& [m, p] : b.terms()) {
    Form t = Form::function(f.source(), f.function_pullback(p));
    for (int a = 0; a < n && !t.is_zero(); ++a)
      if (m & (Mask{1} << a)) t = wedge(t, dy[a]);
    out += t;
  }
  return out;
}

/// g ∘ f.
inline SmoothMapModel compose(const SmoothMapModel& g, const SmoothMapModel& f) {
  if (!(g.source() == f.target())) throw InvalidArgument("compose: maps are not composable");
  std::vector<CoordImage> im;
  for (const auto& gi : g.images()) {
    CoordImage c = gi;
    if (gi.kind == CoordImage::Kind::CircleCoord) {
      const auto& fi = f.images().at(gi.source);
      c = fi;
      if (fi.kind == CoordImage::Kind::CircleCoord) c.sign = gi.sign * fi.sign;
    } else if (gi.kind == CoordImage::Kind::Polynomial) {
      c.poly = f.function_pullback(gi.poly);
    }
    im.push_back(std::move(c));
  }
  return {f.source(), g.target(), std::move(im)};
}

class ProjectionMap {
 public:
  ProjectionMap() = default;
  /// Target coordinate a is source coordinate inj[a].
  ProjectionMap(Space source, Space target, std::vector<int> inj, int fiber_sign = 1)
      : source_(std::move(source)), target_(std::move(target)), inj_(std::move(inj)), fiber_sign_(fiber_sign) {
    if (static_cast<int>(inj_.size()) != target_.dim()) throw InvalidArgument("projection needs one source index per target coordinate");
    if (fiber_sign_ != 1 && fiber_sign_ != -1) throw InvalidArgument("fiber_sign must be ±1");
    std::vector<bool> used(source_.dim(), false);
    for (int a = 0; a < target_.dim(); ++a) {
      int s = inj_[a];
      if (s < 0 || s >= source_.dim() || used[s]) throw InvalidArgument("projection injection is not injective");
      used[s] = true;
      if (source_.coords[s].kind != target_.coords[a].kind) throw InvalidArgument("projection is not type-preserving");
    }
    for (int i = 0; i < source_.dim(); ++i)
      if (!used[i]) fiber_.push_back(i);
  }

  /// Projection onto the listed source coordinates, in that order.
  static ProjectionMap onto(const Space& source, const std::vector<int>& keep) {
    Space t;
    for (int i : keep) t.coords.push_back(source.coords.at(i));
    return {source, t, keep};
  }

  static ProjectionMap identity(const Space& s) {
    std::vector<int> inj(s.dim());
    std::iota(inj.begin(), inj.end(), 0);
    return {s, s, inj};
  }

  const Space& source() const noexcept { return source_; }
  const Space& target() const noexcept { return target_; }
  const std::vector<int>& injection() const noexcept { return inj_; }
  const std::vector<int>& fiber() const noexcept { return fiber_; }
  int fiber_sign() const noexcept { return fiber_sign_; }
  int reldim() const noexcept { return static_cast<int>(fiber_.size()); }

  SmoothMapModel as_map() const {
    std::vector<CoordImage> im;
    for (int s : inj_) im.push_back(SmoothMapModel::coordinate_image(source_, s));
    return {source_, target_, std::move(im)};
  }

  std::string to_string() const {
    std::string out = source_.to_string() + " -> " + target_.to_string();
    if (fiber_sign_ < 0) out += " (fiber reversed)";
    return out;
  }

 private:
  Space source_, target_;
  std::vector<int> inj_;
  std::vector<int> fiber_;
  int fiber_sign_ = 1;
};

namespace detail {

inline int permutation_parity(const std::vector<int>& v) {
  int n = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++n;
  return n & 1;
}

}  // namespace detail

/// Integration along the fibers; deg p_!β = deg β − reldim p.
inline Form pushforward(const ProjectionMap& p, const Form& b) {
  if (!(b.space() == p.source())) throw InvalidArgument("pushforward: form does not live on the source");
  const int n = p.source().dim();
  Mask fiber_mask = 0;
  for (int f : p.fiber()) fiber_mask |= Mask{1} << f;
  std::vector<int> where(n, -1);
  for (int a = 0; a < p.target().dim(); ++a) where[p.injection()[a]] = a;
  Form out(p.target());
  for (const auto& [m, poly] : b.terms()) {
    if ((m & fiber_mask) != fiber_mask) continue;
    // Position of each generator of the term in (base by target index, fiber by source order).
    std::vector<int> key;
    Mask tm = 0;
    for (int i = 0; i < n; ++i) {
      if (!(m & (Mask{1} << i))) continue;
      if (where[i] >= 0) {
        key.push_back(where[i]);
        tm |= Mask{1} << where[i];
      } else {
        key.push_back(n + i);
      }
    }
    Poly q = poly;
    for (int f : p.fiber())
      if (p.source().is_interval(f)) q = q.integrate_unit(f);
    Rational s = (detail::permutation_parity(key) ? -1 : 1) * p.fiber_sign();
    out.add_term(tm, s * q.reindex(where, p.target().dim()));
  }
  return out;
}

/// q ∘ p with the fiber oriented as (fiber of q) then (fiber of p).
inline ProjectionMap compose(const ProjectionMap& q, const ProjectionMap& p) {
  if (!(q.source() == p.target())) throw InvalidArgument("compose: projections are not composable");
  std::vector<int> inj;
  for (int a : q.injection()) inj.push_back(p.injection()[a]);
  std::vector<int> iterated;
  for (int f : q.fiber()) iterated.push_back(p.injection()[f]);
  for (int f : p.fiber()) iterated.push_back(f);
  const int sign = (detail::permutation_parity(iterated) ? -1 : 1) * p.fiber_sign() * q.fiber_sign();
  return {p.source(), q.target(), inj, sign};
}

/// The projection as a smooth map composed with g.
inline SmoothMapModel compose(const SmoothMapModel& g, const ProjectionMap& p) { return compose(g, p.as_map()); }

}  // namespace bmsign::geo
