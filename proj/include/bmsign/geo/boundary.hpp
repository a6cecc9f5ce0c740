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

// Boundary faces, oriented outer normal first.

#pragma once

#include <bmsign/geo/maps.hpp>

#include <vector>

namespace bmsign::geo {

struct Face {
  Space space;
  SmoothMapModel inclusion;  // face -> M
  int sign = 1;              // face orientation relative to its own coordinate order
  int coord = 0;             // the interval coordinate of M that is frozen
  int value = 1;             // frozen at 0 or 1
};

namespace detail {

inline Face make_face(const Space& m, int c, int value, int sign) {
  Space f;
  std::vector<int> where;
  for (int i = 0; i < m.dim(); ++i) {
    where.push_back(i == c ? -1 : f.dim());
    if (i != c) f.coords.push_back(m.coords[i]);
  }
  std::vector<CoordImage> im;
  for (int i = 0; i < m.dim(); ++i) {
    CoordImage x;
    if (i == c) {
      x.kind = CoordImage::Kind::Constant;
      x.value = value;
    } else {
      x = SmoothMapModel::coordinate_image(f, where[i]);
    }
    im.push_back(std::move(x));
  }
  return {f, SmoothMapModel(f, m, std::move(im)), sign, c, value};
}

}  // namespace detail

/// Two faces per interval coordinate at position pos: t = 1 with (−1)^pos, t = 0 with the opposite.
inline std::vector<Face> boundary(const Space& m) {
  std::vector<Face> out;
  for (int c = 0; c < m.dim(); ++c) {
    if (!m.is_interval(c)) continue;
    const int s = (c % 2) ? -1 : 1;
    out.push_back(detail::make_face(m, c, 1, s));
    out.push_back(detail::make_face(m, c, 0, -s));
  }
  return out;
}

struct VerticalFace {
  Face face;
  ProjectionMap projection;  // face -> base, oriented as the induced boundary orientation
};

/// Faces of the fiber boundary of p: M → N, each with its restricted projection.
///
/// With M oriented as ω_N ∧ σ·ω_F (σ the fiber sign), the outer normal of the face
/// y_c = 1 at fiber position q contracts to (−1)^{dim N + q} σ ω_N ∧ ω_{F∖c}.
inline std::vector<VerticalFace> vertical_boundary(const ProjectionMap& p) {
  std::vector<VerticalFace> out;
  const int n = p.target().dim();
  for (std::size_t q = 0; q < p.fiber().size(); ++q) {
    const int c = p.fiber()[q];
    if (!p.source().is_interval(c)) continue;
    for (int value : {1, 0}) {
      const int s = (((n + static_cast<int>(q)) % 2) ? -1 : 1) * (value ? 1 : -1) * p.fiber_sign();
      Face f = detail::make_face(p.source(), c, value, s);
      std::vector<int> inj;
      for (int a : p.injection()) inj.push_back(a < c ? a : a - 1);
      out.push_back({f, ProjectionMap(f.space, p.target(), inj, s)});
    }
  }
  return out;
}

/// (p|_{∂M})_! β summed over the fiber boundary.
inline Form boundary_pushforward(const ProjectionMap& p, const Form& b) {
  Form out(p.target());
  for (const auto& vf : vertical_boundary(p)) out += pushforward(vf.projection, pullback(vf.face.inclusion, b));
  return out;
}

}  // namespace bmsign::geo
