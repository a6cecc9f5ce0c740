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

// Smooth correspondences (X, f1, f2) acting by (f1)_! ∘ f2^*, base change and
// composition through fiber products.

#pragma once

#include <bmsign/geo/boundary.hpp>

#include <string>
#include <vector>

namespace bmsign::geo {

struct CorrespondenceModel {
  Space X;
  ProjectionMap f1;  // X -> N1, the submersive leg
  SmoothMapModel f2;  // X -> N2

  void validate() const {
    if (!(f1.source() == X) || !(f2.source() == X)) throw InvalidArgument("correspondence legs must start at X");
  }
};

inline CorrespondenceModel identity_correspondence(const Space& s) {
  return {s, ProjectionMap::identity(s), SmoothMapModel::identity(s)};
}

inline Form corr_apply(const CorrespondenceModel& c, const Form& xi) {
  c.validate();
  return pushforward(c.f1, pullback(c.f2, xi));
}

/// The boundary contribution of Corr_X, pushed along the fiber boundary of f1.
inline Form corr_boundary(const CorrespondenceModel& c, const Form& xi) {
  c.validate();
  return boundary_pushforward(c.f1, pullback(c.f2, xi));
}

/// S ×_N M for p: M → N and f: S → N; the product is S × F with F the fiber of p.
struct BaseChange {
  Space product;
  ProjectionMap pbar;      // S × F -> S
  SmoothMapModel ftilde;   // S × F -> M
};

inline BaseChange base_change(const ProjectionMap& p, const SmoothMapModel& f) {
  if (!(f.target() == p.target())) throw InvalidArgument("base change: map does not land in the base");
  const Space& s = f.source();
  const int ns = s.dim();
  Space prod = s;
  for (int i : p.fiber()) prod.coords.push_back(p.source().coords[i]);
  std::vector<int> inj(ns);
  for (int i = 0; i < ns; ++i) inj[i] = i;
  ProjectionMap pbar(prod, s, inj, p.fiber_sign());

  // Widen images of f to the product ring.
  std::vector<int> widen(ns);
  for (int i = 0; i < ns; ++i) widen[i] = i;
  std::vector<CoordImage> im(p.source().dim());
  for (int a = 0; a < p.target().dim(); ++a) {
    CoordImage c = f.images()[a];
    if (c.kind == CoordImage::Kind::Polynomial) c.poly = c.poly.reindex(widen, prod.dim());
    im[p.injection()[a]] = std::move(c);
  }
  for (std::size_t q = 0; q < p.fiber().size(); ++q)
    im[p.fiber()[q]] = SmoothMapModel::coordinate_image(prod, ns + static_cast<int>(q));
  return {prod, pbar, SmoothMapModel(prod, p.source(), std::move(im))};
}

/// X13 = X12 ×_{N2} X23 with legs f1 ∘ pbar and g2 ∘ ftilde.
inline CorrespondenceModel fiber_product(const CorrespondenceModel& c12, const CorrespondenceModel& c23) {
  c12.validate();
  c23.validate();
  if (!(c12.f2.target() == c23.f1.target())) throw InvalidArgument("fiber product: middle spaces differ");
  BaseChange bc = base_change(c23.f1, c12.f2);
  return {bc.product, compose(c12.f1, bc.pbar), compose(c23.f2, bc.ftilde)};
}

}  // namespace bmsign::geo
