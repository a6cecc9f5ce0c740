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

/// @file strata.hpp
/// Moduli descriptors M_{k+1}(B) and their codimension-one boundary strata
/// M_{k'+1}(B') x_{R_α} M_{k''+1}(B'').
///
/// Lagrangians are labelled L_0..L_k around the disk boundary. Input i sits on
/// the component keyed (i-1, i), the output on (0, k), and the node of an
/// inner polygon taking inputs j..j+k''-1 on (j-1, j+k''-1); for k'' = 0 this
/// is the self-pair (j-1, j-1).
#pragma once

#include <bmsign/core.hpp>
#include <bmsign/novikov.hpp>
#include <bmsign/signs.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bmsign::strata {

struct ComponentData {
  std::string name;
  long long dimension = 0;
  Parity maslov_parity = 0;
  bool twisted = false;  // Θ trivialized when false; sign content lives in maslov_parity
  friend bool operator==(const ComponentData&, const ComponentData&) = default;
};

struct EnergyClass {
  Rational energy{0};
  std::string tag;
  friend bool operator==(const EnergyClass& a, const EnergyClass& b) { return a.energy == b.energy && a.tag == b.tag; }
  friend bool operator<(const EnergyClass& a, const EnergyClass& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.tag < b.tag;
  }
  bool is_zero() const { return energy == 0; }
};

struct ModuliDescriptor {
  int k = 0;
  EnergyClass B;
  ComponentData output;
  std::vector<ComponentData> inputs;
  friend bool operator==(const ModuliDescriptor&, const ModuliDescriptor&) = default;

  /// (k,B) = (1,0) is the differential.
  bool is_differential() const { return k == 1 && B.is_zero(); }
};

struct BoundaryStratum {
  int j = 1;
  ModuliDescriptor outer;
  ModuliDescriptor inner;
  ComponentData node;
  Parity sign = 0;
  bool vanishing = false;  // inner factor is m_{0,0} = 0
};

/// Component per pair of Lagrangian labels.
class ComponentTable {
 public:
  void set(int a, int b, ComponentData c) { table_[{a, b}] = std::move(c); }

  const ComponentData& at(int a, int b) const {
    auto it = table_.find({a, b});
    if (it == table_.end())
      throw InvalidArgument("no component for Lagrangian pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return it->second;
  }

  /// One component for every pair 0 <= a <= b <= k with seeded dimension in
  /// [0,3] and Maslov parity; seed 0 gives all-zero data.
  static ComponentTable synthetic(int k, std::uint64_t seed = 0) {
    ComponentTable t;
    std::mt19937_64 rng(seed);
    for (int a = 0; a <= k; ++a)
      for (int b = a; b <= k; ++b) {
        ComponentData c;
        c.name = "R" + std::to_string(a) + "_" + std::to_string(b);
        if (seed != 0) {
          c.dimension = static_cast<long long>(rng() % 4);
          c.maslov_parity = static_cast<Parity>(rng() % 2);
        }
        t.set(a, b, std::move(c));
      }
    return t;
  }

  ModuliDescriptor descriptor(int k, EnergyClass B) const {
    ModuliDescriptor d{k, std::move(B), at(0, k), {}};
    for (int i = 1; i <= k; ++i) d.inputs.push_back(at(i - 1, i));
    return d;
  }

 private:
  std::map<std::pair<int, int>, ComponentData> table_;
};

namespace detail {

inline std::vector<long long> mus_of(const std::vector<ComponentData>& cs) {
  std::vector<long long> out;
  for (const auto& c : cs) out.push_back(c.maslov_parity);
  return out;
}

inline void check_well_formed(const ModuliDescriptor& m, const BoundaryStratum& s) {
  const int k1 = s.outer.k, k2 = s.inner.k;
  if (k1 + k2 != m.k + 1) throw InvalidArgument("stratum: k' + k'' != k + 1");
  if (s.j < 1 || s.j > k1) throw InvalidArgument("stratum: slot j out of range");
  if (s.outer.B.energy + s.inner.B.energy != m.B.energy) throw InvalidArgument("stratum: energies do not add up");
  if (s.outer.is_differential() || s.inner.is_differential())
    throw InvalidArgument("stratum: (1,0) factors are not boundary strata");
  if (static_cast<int>(m.inputs.size()) != m.k || static_cast<int>(s.inner.inputs.size()) != k2 ||
      static_cast<int>(s.outer.inputs.size()) != k1)
    throw InvalidArgument("stratum: input list length mismatch");
  for (int i = 0; i < k2; ++i)
    if (!(s.inner.inputs[i] == m.inputs[s.j - 1 + i])) throw InvalidArgument("stratum: inner inputs mismatch");
  if (!(s.outer.inputs[s.j - 1] == s.node) || !(s.inner.output == s.node))
    throw InvalidArgument("stratum: node component mismatch");
}

}  // namespace detail

/// Sign context of a stratum of m (degrees zeroed: κ does not depend on them).
inline signs::SignContext stratum_context(const ModuliDescriptor& m, const BoundaryStratum& s) {
  detail::check_well_formed(m, s);
  signs::SignContext c;
  c.k = m.k;
  c.j = s.j;
  c.k_outer = s.outer.k;
  c.k_inner = s.inner.k;
  c.degs.assign(m.k, 0);
  c.mus = detail::mus_of(m.inputs);
  c.mu_node = s.node.maslov_parity;
  c.mu_out = m.output.maslov_parity;
  c.dim_out = m.output.dimension;
  c.dim_node = s.node.dimension;
  return c;
}

/// κ of the stratum; throws InvalidArgument on a malformed stratum.
inline Parity stratum_sign(const ModuliDescriptor& m, const BoundaryStratum& s) {
  return signs::kappa(stratum_context(m, s));
}

/// Virtual dimension dim R_{α0} + μ(R_{α0}) - Σ μ(R_{αi}) + k - 2 with parities read as 0/1.
inline long long moduli_dim(const ModuliDescriptor& m) {
  long long d = m.output.dimension + m.output.maslov_parity + m.k - 2;
  for (const auto& c : m.inputs) d -= c.maslov_parity;
  return d;
}

/// dim M' + dim M'' - dim R_α ≡ dim M - 1 (mod 2).
inline bool codim_one_consistent(const ModuliDescriptor& m, const BoundaryStratum& s) {
  return parity(moduli_dim(s.outer) + moduli_dim(s.inner) - s.node.dimension) == parity(moduli_dim(m) - 1);
}

/// All strata of M_{k+1}(B), including vanishing (m_{0,0}) ones, ordered by
/// j, then k'', then B'' energy. Throws if B's energy is not a spectrum level.
inline std::vector<BoundaryStratum> enumerate_strata(int k, const EnergyClass& B, const novikov::GappedSpectrum& spectrum,
                                                     const ComponentTable& table) {
  if (k < 0) throw InvalidArgument("k must be >= 0");
  if (!spectrum.contains(B.energy)) throw InvalidArgument("energy " + to_string(B.energy) + " is not in the spectrum");
  const ModuliDescriptor m = table.descriptor(k, B);
  std::vector<BoundaryStratum> out;
  for (int j = 1; j <= k + 1; ++j)
    for (int k2 = 0; k2 <= k + 1 - j; ++k2) {
      const int k1 = k + 1 - k2;
      for (const auto& e2 : spectrum.levels()) {
        if (e2 > B.energy) break;
        const Rational e1 = B.energy - e2;
        if (!spectrum.contains(e1)) continue;
        if ((k1 == 1 && e1 == 0) || (k2 == 1 && e2 == 0)) continue;
        BoundaryStratum s;
        s.j = j;
        s.node = table.at(j - 1, j + k2 - 1);
        s.inner.k = k2;
        s.inner.B = {e2, B.tag};
        s.inner.output = s.node;
        s.inner.inputs.assign(m.inputs.begin() + (j - 1), m.inputs.begin() + (j - 1 + k2));
        s.outer.k = k1;
        s.outer.B = {e1, B.tag};
        s.outer.output = m.output;
        s.outer.inputs.assign(m.inputs.begin(), m.inputs.begin() + (j - 1));
        s.outer.inputs.push_back(s.node);
        s.outer.inputs.insert(s.outer.inputs.end(), m.inputs.begin() + (j - 1 + k2), m.inputs.end());
        s.vanishing = (k2 == 0 && e2 == 0);
        s.sign = stratum_sign(m, s);
        out.push_back(std::move(s));
      }
    }
  return out;
}

inline std::vector<BoundaryStratum> nonvanishing(std::vector<BoundaryStratum> v) {
  std::erase_if(v, [](const BoundaryStratum& s) { return s.vanishing; });
  return v;
}

/// (j, k', E(B'), k'', E(B'')) of a stratum or a composition term.
struct SplitIndex {
  int j = 1;
  int k_outer = 1;
  Rational e_outer{0};
  int k_inner = 0;
  Rational e_inner{0};
  friend bool operator==(const SplitIndex&, const SplitIndex&) = default;
  friend bool operator<(const SplitIndex& a, const SplitIndex& b) {
    return std::tie(a.j, a.k_outer, a.e_outer, a.k_inner, a.e_inner) <
           std::tie(b.j, b.k_outer, b.e_outer, b.k_inner, b.e_inner);
  }
  std::string to_string() const {
    return "(j=" + std::to_string(j) + ",k'=" + std::to_string(k_outer) + ",B'=" + bmsign::to_string(e_outer) +
           ",k''=" + std::to_string(k_inner) + ",B''=" + bmsign::to_string(e_inner) + ")";
  }
};

inline SplitIndex index_of(const BoundaryStratum& s) {
  return {s.j, s.outer.k, s.outer.B.energy, s.inner.k, s.inner.B.energy};
}

/// Nonzero terms m_{k',B'}(…, m̂_{k'',B''} at slot j, …) of the A∞ relation at (k,B),
/// both factors different from the differential. Enumerated by k', then B', then j.
inline std::vector<SplitIndex> composition_terms(int k, const Rational& energy, const novikov::GappedSpectrum& spectrum) {
  std::vector<SplitIndex> out;
  for (int k1 = 1; k1 <= k + 1; ++k1)
    for (const auto& e1 : spectrum.levels()) {
      const Rational e2 = energy - e1;
      if (e2 < 0 || !spectrum.contains(e2)) continue;
      const int k2 = k + 1 - k1;
      if (k1 == 1 && e1 == 0) continue;
      if (k2 == 1 && e2 == 0) continue;
      if (k2 == 0 && e2 == 0) continue;  // m_{0,0} = 0
      for (int j = 1; j <= k1; ++j) out.push_back({j, k1, e1, k2, e2});
    }
  return out;
}

struct PairingReport {
  bool perfect = true;
  std::vector<std::pair<SplitIndex, SplitIndex>> matching;  // (stratum, term)
  std::vector<SplitIndex> unmatched_strata;
  std::vector<SplitIndex> unmatched_terms;
};

/// Matches the given strata against the composition terms as multisets.
inline PairingReport pair_with_composition_terms(int k, const Rational& energy, const novikov::GappedSpectrum& spectrum,
                                                 const std::vector<BoundaryStratum>& strata) {
  std::vector<SplitIndex> lhs, rhs = composition_terms(k, energy, spectrum);
  for (const auto& s : strata)
    if (!s.vanishing) lhs.push_back(index_of(s));
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  PairingReport r;
  std::size_t a = 0, b = 0;
  while (a < lhs.size() || b < rhs.size()) {
    if (b == rhs.size() || (a < lhs.size() && lhs[a] < rhs[b])) {
      r.unmatched_strata.push_back(lhs[a++]);
    } else if (a == lhs.size() || rhs[b] < lhs[a]) {
      r.unmatched_terms.push_back(rhs[b++]);
    } else {
      r.matching.emplace_back(lhs[a++], rhs[b++]);
    }
  }
  r.perfect = r.unmatched_strata.empty() && r.unmatched_terms.empty();
  return r;
}

inline PairingReport pair_with_composition_terms(int k, const EnergyClass& B, const novikov::GappedSpectrum& spectrum,
                                                 const ComponentTable& table) {
  return pair_with_composition_terms(k, B.energy, spectrum, enumerate_strata(k, B, spectrum, table));
}

}  // namespace bmsign::strata
