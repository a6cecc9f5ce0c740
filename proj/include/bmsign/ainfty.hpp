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

// Finite filtered A-infinity structures over truncated Λ₀.
//
// Elements are Λ₀-combinations of basis generators of one or more hom spaces.
// An operation m_{k,B} is a sparse table on basis tuples; m_k sums its energy
// classes with weight T^{E(B)}. Everything is truncated at the cutoff.

#pragma once

#include <bmsign/core.hpp>
#include <bmsign/novikov.hpp>
#include <bmsign/signs.hpp>
#include <bmsign/strata.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace bmsign::ainfty {

using novikov::EnergyCutoff;
using novikov::GappedSpectrum;
using novikov::NovikovElement;
using strata::ComponentData;
using strata::EnergyClass;

struct Generator {
  std::string name;
  long long degree = 0;
};

struct HomSpace {
  ComponentData component;
  std::vector<Generator> basis;

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return static_cast<int>(i);
    throw InvalidArgument("no generator '" + std::string(name) + "' in " + component.name);
  }
};

/// Generator `idx` of hom space `comp`.
struct BasisRef {
  int comp = 0;
  int idx = 0;
  friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

/// Canonical element: zero coefficients are never stored.
using Chain = std::map<BasisRef, NovikovElement>;

inline void add_to(Chain& c, const BasisRef& r, const NovikovElement& x) {
  if (x.is_zero()) return;
  auto it = c.find(r);
  if (it == c.end()) {
    c.emplace(r, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) c.erase(it);
}

inline void add_to(Chain& c, const Chain& x, const NovikovElement& scale = NovikovElement(1L)) {
  for (const auto& [r, v] : x) add_to(c, r, v * scale);
}

inline Chain truncate(const Chain& c, const EnergyCutoff& e) {
  Chain out;
  for (const auto& [r, v] : c) add_to(out, r, v.truncated(e));
  return out;
}

inline Chain basis_chain(const BasisRef& r) { return Chain{{r, NovikovElement(1L)}}; }

/// Smallest valuation among the coefficients (nullopt for 0).
inline std::optional<Rational> valuation(const Chain& c) {
  std::optional<Rational> v;
  for (const auto& [r, x] : c)
    if (!v || *x.valuation() < *v) v = x.valuation();
  return v;
}

/// Values of one m_{k,B} on basis tuples: input generator indices ↦ output combination.
struct Operation {
  int k = 0;
  EnergyClass B;
  std::vector<int> inputs;  // component indices
  int output = 0;
  std::map<std::vector<int>, std::map<int, NovikovElement>> values;
};

class FilteredAInfty;

FilteredAInfty deform(const FilteredAInfty& a, const Chain& b, const Rational& lambda_min);

class FilteredAInfty {
 public:
  FilteredAInfty(std::vector<HomSpace> spaces, EnergyCutoff cutoff,
                 GappedSpectrum spectrum = GappedSpectrum::from_levels({0}))
      : spaces_(std::move(spaces)), cutoff_(std::move(cutoff)), spectrum_(std::move(spectrum)) {
    if (spaces_.empty()) throw InvalidArgument("structure needs at least one component");
    for (std::size_t i = 0; i < spaces_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (spaces_[i].component.name == spaces_[j].component.name)
          throw InvalidArgument("duplicate component " + spaces_[i].component.name);
  }

  const std::vector<HomSpace>& spaces() const noexcept { return spaces_; }
  const EnergyCutoff& cutoff() const noexcept { return cutoff_; }
  const GappedSpectrum& spectrum() const noexcept { return spectrum_; }
  const std::vector<Operation>& operations() const noexcept { return ops_; }
  bool is_deformed() const noexcept { return base_ != nullptr; }
  const Chain& bounding_cochain() const noexcept { return b_; }

  int component_index(std::string_view name) const {
    for (std::size_t i = 0; i < spaces_.size(); ++i)
      if (spaces_[i].component.name == name) return static_cast<int>(i);
    throw InvalidArgument("unknown component '" + std::string(name) + "'");
  }

  const Generator& generator(const BasisRef& r) const { return spaces_.at(r.comp).basis.at(r.idx); }

  /// |x|' = deg x + μ − 1.
  long long shifted_degree(const BasisRef& r) const {
    return signs::shifted_degree(generator(r).degree, spaces_.at(r.comp).component.maslov_parity);
  }

  std::vector<BasisRef> all_generators() const {
    std::vector<BasisRef> out;
    for (std::size_t c = 0; c < spaces_.size(); ++c)
      for (std::size_t i = 0; i < spaces_[c].basis.size(); ++i)
        out.push_back({static_cast<int>(c), static_cast<int>(i)});
    return out;
  }

  /// Largest k with a possibly nonzero m_k (-1 if none).
  int max_arity() const {
    if (base_) return base_->max_arity();
    int m = -1;
    for (const auto& op : ops_) m = std::max(m, op.k);
    return m;
  }

  /// Adds m_{k,B}. Checks arity, components, spectrum membership, m_{0,0} = 0 and the
  /// degree rule |m_k(x)|' ≡ Σ|x_i|' + 1.
  void add_operation(Operation op) {
    if (base_) throw InvalidArgument("cannot add operations to a deformed structure");
    if (op.k < 0 || static_cast<int>(op.inputs.size()) != op.k)
      throw InvalidArgument("operation arity does not match its input components");
    auto check_comp = [&](int c) {
      if (c < 0 || c >= static_cast<int>(spaces_.size())) throw InvalidArgument("component index out of range");
    };
    for (int c : op.inputs) check_comp(c);
    check_comp(op.output);
    if (op.B.energy < 0 || !spectrum_.contains(op.B.energy))
      throw InvalidArgument("energy " + bmsign::to_string(op.B.energy) + " is not in the gapped spectrum");
    for (auto& [in, out] : op.values) {
      if (static_cast<int>(in.size()) != op.k) throw InvalidArgument("value tuple has the wrong length");
      long long s = 1;
      for (int i = 0; i < op.k; ++i) {
        if (in[i] < 0 || in[i] >= static_cast<int>(spaces_[op.inputs[i]].basis.size()))
          throw InvalidArgument("value tuple references a missing generator");
        s += shifted_degree({op.inputs[i], in[i]});
      }
      std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
      for (const auto& [o, c] : out) {
        if (o < 0 || o >= static_cast<int>(spaces_[op.output].basis.size()))
          throw InvalidArgument("value references a missing output generator");
        if (parity(shifted_degree({op.output, o})) != parity(s))
          throw InvalidArgument("m_" + std::to_string(op.k) + " value violates the degree rule");
      }
      if (op.k == 0 && op.B.is_zero() && !out.empty()) throw InvalidArgument("m_{0,0} must vanish");
    }
    for (auto& existing : ops_)
      if (existing.k == op.k && existing.B == op.B && existing.inputs == op.inputs && existing.output == op.output)
        throw InvalidArgument("duplicate operation table");
    ops_.push_back(std::move(op));
  }

  /// m_k on a basis tuple, summed over energy classes and truncated.
  Chain apply(int k, const std::vector<BasisRef>& xs) const {
    if (static_cast<int>(xs.size()) != k) throw InvalidArgument("apply: arity mismatch");
    if (base_) return apply_deformed(xs);
    Chain out;
    std::vector<int> comps(xs.size()), idx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) comps[i] = xs[i].comp, idx[i] = xs[i].idx;
    for (const auto& op : ops_) {
      if (op.k != k || op.inputs != comps) continue;
      auto it = op.values.find(idx);
      if (it == op.values.end()) continue;
      const NovikovElement w = NovikovElement::T(op.B.energy);
      for (const auto& [o, c] : it->second) add_to(out, BasisRef{op.output, o}, (c * w).truncated(cutoff_));
    }
    return out;
  }

  /// m_k extended multilinearly to arbitrary elements.
  Chain apply(int k, const std::vector<Chain>& xs) const {
    if (static_cast<int>(xs.size()) != k) throw InvalidArgument("apply: arity mismatch");
    Chain out;
    for (const auto& x : xs)
      if (x.empty()) return out;
    std::vector<Chain::const_iterator> pos;
    for (const auto& x : xs) pos.push_back(x.begin());
    std::vector<BasisRef> tuple(xs.size());
    for (;;) {
      NovikovElement coeff(1L);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        tuple[i] = pos[i]->first;
        coeff = (coeff * pos[i]->second).truncated(cutoff_);
      }
      if (!coeff.is_zero()) add_to(out, apply(k, tuple), coeff);
      std::size_t i = 0;
      for (; i < xs.size(); ++i) {
        if (++pos[i] != xs[i].end()) break;
        pos[i] = xs[i].begin();
      }
      if (i == xs.size()) break;
    }
    return truncate(out, cutoff_);
  }

  std::string format(const Chain& c) const {
    if (c.empty()) return "0";
    std::string out;
    for (const auto& [r, v] : c) {
      if (!out.empty()) out += " + ";
      out += "(" + v.to_string() + ")*" + generator(r).name;
    }
    return out;
  }

  std::string format(const std::vector<BasisRef>& tuple) const {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) out += (i ? ", " : "") + generator(tuple[i]).name;
    return out + ")";
  }

 private:
  friend FilteredAInfty deform(const FilteredAInfty&, const Chain&, const Rational&);

  // m^b_k(x) = Σ_L Σ m_{k+L}(b^{l_0}, x_1, b^{l_1}, …, x_k, b^{l_k}); |b|' is even so no signs.
  Chain apply_deformed(const std::vector<BasisRef>& xs) const {
    const int k = static_cast<int>(xs.size());
    Chain out;
    const int top = base_->max_arity();
    for (int L = 0; L <= max_copies_ && k + L <= top; ++L) {
      std::vector<int> l(k + 1, 0);
      auto place = [&](auto&& self, int slot, int left) -> void {
        if (slot == k) {
          l[k] = left;
          std::vector<Chain> word;
          for (int i = 0; i <= k; ++i) {
            for (int c = 0; c < l[i]; ++c) word.push_back(b_);
            if (i < k) word.push_back(basis_chain(xs[i]));
          }
          add_to(out, base_->apply(k + L, word));
          return;
        }
        for (int c = 0; c <= left; ++c) {
          l[slot] = c;
          self(self, slot + 1, left - c);
        }
      };
      place(place, 0, L);
    }
    return truncate(out, cutoff_);
  }

  std::vector<HomSpace> spaces_;
  EnergyCutoff cutoff_;
  GappedSpectrum spectrum_;
  std::vector<Operation> ops_;
  std::shared_ptr<const FilteredAInfty> base_;
  Chain b_;
  int max_copies_ = 0;
};

/// m^b for a bounding cochain b with even shifted degree and valuation ≥ λ_min > 0.
/// Copies of b are inserted lazily; L copies cost at least L·λ_min energy.
inline FilteredAInfty deform(const FilteredAInfty& a, const Chain& b, const Rational& lambda_min) {
  if (lambda_min <= 0) throw InvalidArgument("deform: lambda_min must be positive");
  for (const auto& [r, x] : b) {
    if (parity(a.shifted_degree(r)) != 0)
      throw InvalidArgument("deform: b has odd shifted degree on " + a.generator(r).name);
    if (*x.valuation() < lambda_min)
      throw InvalidArgument("deform: coefficient of " + a.generator(r).name + " has valuation below lambda_min");
  }
  FilteredAInfty out(a.spaces(), a.cutoff(), a.spectrum());
  out.base_ = std::make_shared<const FilteredAInfty>(a);
  out.b_ = truncate(b, a.cutoff());
  Rational q = a.cutoff().value() / lambda_min;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  out.max_copies_ = static_cast<int>(c.get_si()) - 1;
  return out;
}

/// A coderivation term: the word with m_{k''} inserted at slot j, and its Koszul sign.
struct HatTerm {
  Parity sign = 0;
  std::vector<Chain> word;
};

/// (−1)^{Σ_{i<j}|x_i|'} (x_1, …, x_{j−1}, m_{k''}(x_j, …), …, x_k).
inline HatTerm hat_apply(const FilteredAInfty& a, int k_inner, int j, const std::vector<BasisRef>& xs) {
  const int k = static_cast<int>(xs.size());
  if (k_inner < 0 || j < 1 || j > k - k_inner + 1) throw InvalidArgument("hat_apply: slot out of range");
  std::vector<long long> degs, mus;
  for (const auto& r : xs) {
    degs.push_back(a.generator(r).degree);
    mus.push_back(a.spaces()[r.comp].component.maslov_parity);
  }
  HatTerm t;
  t.sign = signs::koszul_prefix(degs, mus, j);
  for (int i = 0; i < j - 1; ++i) t.word.push_back(basis_chain(xs[i]));
  std::vector<BasisRef> inner(xs.begin() + (j - 1), xs.begin() + (j - 1 + k_inner));
  t.word.push_back(a.apply(k_inner, inner));
  for (int i = j - 1 + k_inner; i < k; ++i) t.word.push_back(basis_chain(xs[i]));
  return t;
}

/// Σ_{k'+k''=k+1} Σ_j m_{k'}(m̂_{k''}(x)), truncated at the cutoff.
inline Chain ainfty_defect(const FilteredAInfty& a, const std::vector<BasisRef>& xs) {
  const int k = static_cast<int>(xs.size());
  Chain out;
  for (int k2 = 0; k2 <= k; ++k2)
    for (int j = 1; j <= k - k2 + 1; ++j) {
      HatTerm t = hat_apply(a, k2, j, xs);
      if (t.word[j - 1].empty()) continue;
      add_to(out, a.apply(k - k2 + 1, t.word), NovikovElement(t.sign ? -1L : 1L));
    }
  return truncate(out, a.cutoff());
}

struct RelationOptions {
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_limit = 10000;
  std::size_t samples = 1000;
};

struct ArityRun {
  int k = 0;
  std::size_t tuples = 0;
  bool exhaustive = true;
};

struct RelationFailure {
  int k = 0;
  std::vector<BasisRef> tuple;
  std::string tuple_text;
  std::string defect;
};

struct RelationReport {
  bool passed = true;
  std::vector<ArityRun> runs;
  std::optional<RelationFailure> failure;
};

/// Relations for k = 0..k_max; exhaustive over basis tuples up to the limit, otherwise seeded samples.
inline RelationReport check_relations(const FilteredAInfty& a, int k_max, const RelationOptions& opt = {}) {
  if (k_max < 0) throw InvalidArgument("check_relations: k_max must be nonnegative");
  RelationReport rep;
  const auto gens = a.all_generators();
  const std::uint64_t n = gens.size();
  std::mt19937_64 rng(opt.seed);
  auto test = [&](int k, const std::vector<BasisRef>& t) {
    Chain d = ainfty_defect(a, t);
    if (d.empty()) return true;
    rep.passed = false;
    rep.failure = RelationFailure{k, t, a.format(t), a.format(d)};
    return false;
  };
  for (int k = 0; k <= k_max; ++k) {
    std::uint64_t count = 1;
    bool exhaustive = true;
    for (int i = 0; i < k && exhaustive; ++i) {
      count *= n;
      if (count > opt.exhaustive_limit) exhaustive = false;
    }
    ArityRun run{k, 0, exhaustive};
    std::vector<BasisRef> t(k);
    if (exhaustive) {
      std::vector<std::size_t> pos(k, 0);
      for (std::uint64_t c = 0; c < count; ++c) {
        for (int i = 0; i < k; ++i) t[i] = gens[pos[i]];
        ++run.tuples;
        if (!test(k, t)) {
          rep.runs.push_back(run);
          return rep;
        }
        for (int i = k - 1; i >= 0; --i) {
          if (++pos[i] < n) break;
          pos[i] = 0;
        }
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < opt.samples; ++s) {
        for (int i = 0; i < k; ++i) t[i] = gens[pick(rng)];
        ++run.tuples;
        if (!test(k, t)) {
          rep.runs.push_back(run);
          return rep;
        }
      }
    }
    rep.runs.push_back(run);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Graded-commutative DGAs and their A∞ embedding.

struct Dga {
  ComponentData component;
  std::vector<Generator> basis;
  std::vector<std::map<int, Rational>> d;                     // d(e_i)
  std::map<std::pair<int, int>, std::map<int, Rational>> mul;  // e_i e_j; absent means 0

  std::map<int, Rational> product(const std::map<int, Rational>& x, const std::map<int, Rational>& y) const {
    std::map<int, Rational> out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        auto it = mul.find({i, j});
        if (it == mul.end()) continue;
        for (const auto& [o, c] : it->second) out[o] += a * b * c;
      }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  std::map<int, Rational> differential(const std::map<int, Rational>& x) const {
    std::map<int, Rational> out;
    for (const auto& [i, a] : x)
      for (const auto& [o, c] : d.at(i)) out[o] += a * c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  /// Gradedness, graded commutativity, associativity, d² = 0 and the Leibniz rule.
  void validate() const {
    const int n = static_cast<int>(basis.size());
    if (static_cast<int>(d.size()) != n) throw InvalidArgument("dga: differential table has the wrong size");
    auto e = [](int i) { return std::map<int, Rational>{{i, Rational(1)}}; };
    auto deg = [&](int i) { return basis.at(i).degree; };
    auto scaled = [](std::map<int, Rational> x, const Rational& s) {
      for (auto& [k, v] : x) v *= s;
      return x;
    };
    auto sum = [](std::map<int, Rational> x, const std::map<int, Rational>& y) {
      for (const auto& [k, v] : y) x[k] += v;
      std::erase_if(x, [](const auto& kv) { return kv.second == 0; });
      return x;
    };
    for (int i = 0; i < n; ++i) {
      for (const auto& [o, c] : d[i])
        if (o < 0 || o >= n || deg(o) != deg(i) + 1) throw InvalidArgument("dga: d is not of degree +1");
      if (!differential(d[i]).empty()) throw InvalidArgument("dga: d^2 != 0");
    }
    for (const auto& [ij, out] : mul)
      for (const auto& [o, c] : out)
        if (o < 0 || o >= n || deg(o) != deg(ij.first) + deg(ij.second)) throw InvalidArgument("dga: product is not graded");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational s = parity(deg(i) * deg(j)) ? -1 : 1;
        if (product(e(i), e(j)) != scaled(product(e(j), e(i)), s))
          throw InvalidArgument("dga: product is not graded-commutative");
        const Rational t = parity(deg(i)) ? -1 : 1;
        if (differential(product(e(i), e(j))) != sum(product(d[i], e(j)), scaled(product(e(i), d[j]), t)))
          throw InvalidArgument("dga: Leibniz rule fails");
        for (int k = 0; k < n; ++k)
          if (product(product(e(i), e(j)), e(k)) != product(e(i), product(e(j), e(k))))
            throw InvalidArgument("dga: product is not associative");
      }
  }
};

/// Sign of m_2 on a DGA: s(d1, d2) = a·d1 + b·d2 + c·d1·d2 + e (mod 2), d_i the form degrees.
struct SignRule {
  Parity a = 1, b = 0, c = 0, e = 0;

  Parity operator()(long long d1, long long d2) const {
    return parity(a * d1 + b * d2 + c * d1 * d2 + e);
  }

  /// ε at k = 2 with all μ = 0, read off as a polynomial in (d1, d2).
  static SignRule from_epsilon() {
    auto s = [](long long d1, long long d2) {
      return signs::epsilon(std::vector<long long>{d1, d2}, std::vector<long long>{0, 0});
    };
    SignRule r;
    r.e = s(0, 0);
    r.a = parity(s(1, 0) + r.e);
    r.b = parity(s(0, 1) + r.e);
    r.c = parity(s(1, 1) + r.a + r.b + r.e);
    return r;
  }

  /// All 16 affine-quadratic rules, indexed by the bits (a, b, c, e).
  static std::vector<SignRule> all() {
    std::vector<SignRule> out;
    for (int m = 0; m < 16; ++m) out.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1});
    return out;
  }

  std::string to_string() const {
    std::string out;
    auto add = [&](const char* t) { out += (out.empty() ? "" : " + ") + std::string(t); };
    if (e) add("1");
    if (a) add("d1");
    if (b) add("d2");
    if (c) add("d1*d2");
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const SignRule&, const SignRule&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SignRule& r) { return os << r.to_string(); }
};

/// m_{1,0} = d and m_{2,0}(x, y) = (−1)^{s(deg x, deg y)} x·y; everything else vanishes.
inline FilteredAInfty from_dga(const Dga& dga, const SignRule& rule = SignRule::from_epsilon(),
                               const Rational& cutoff = 1) {
  dga.validate();
  if (parity(dga.component.maslov_parity) != 0)
    throw InvalidArgument("from_dga: an odd Maslov index shifts the product out of degree");
  FilteredAInfty a({HomSpace{dga.component, dga.basis}}, EnergyCutoff(cutoff));
  const int n = static_cast<int>(dga.basis.size());
  Operation m1{1, {}, {0}, 0, {}};
  for (int i = 0; i < n; ++i)
    for (const auto& [o, c] : dga.d[i]) m1.values[{i}][o] = NovikovElement(c);
  Operation m2{2, {}, {0, 0}, 0, {}};
  for (const auto& [ij, out] : dga.mul) {
    const Rational s = rule(dga.basis[ij.first].degree, dga.basis[ij.second].degree) ? -1 : 1;
    for (const auto& [o, c] : out) m2.values[{ij.first, ij.second}][o] = NovikovElement(s * c);
  }
  a.add_operation(std::move(m1));
  a.add_operation(std::move(m2));
  return a;
}

namespace detail {

/// Basis monomials of Λ(gens) tagged with a bitmask; names join generator names with '^'.
inline int koszul_merge(unsigned x, unsigned y) {
  if (x & y) return -1;
  int swaps = 0;
  for (unsigned b = 0; b < 32; ++b)
    if (y & (1U << b)) swaps += std::popcount(x >> (b + 1));
  return swaps & 1;
}

}  // namespace detail

/// Exterior algebra on n degree-one generators named th1..thn, d = 0.
inline Dga exterior_dga(int n, const std::string& name = "T") {
  if (n < 0 || n > 8) throw InvalidArgument("exterior_dga: 0 <= n <= 8");
  Dga g;
  g.component = {name, n, 0, false};
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1U << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  std::map<unsigned, int> where;
  for (unsigned m : masks) {
    std::string nm;
    for (int i = 0; i < n; ++i)
      if (m & (1U << i)) nm += (nm.empty() ? "th" : "^th") + std::to_string(i + 1);
    where[m] = static_cast<int>(g.basis.size());
    g.basis.push_back({nm.empty() ? "1" : nm, std::popcount(m)});
  }
  g.d.assign(g.basis.size(), {});
  for (unsigned x : masks)
    for (unsigned y : masks) {
      int s = detail::koszul_merge(x, y);
      if (s < 0) continue;
      g.mul[{where[x], where[y]}][where[x | y]] = s ? -1 : 1;
    }
  return g;
}

/// Λ(x, y, z) with dz = x∧y.
inline Dga heisenberg_dga() {
  Dga g = exterior_dga(3, "H");
  const char* names[] = {"x", "y", "z"};
  for (auto& b : g.basis) {
    if (b.name == "1") continue;
    std::string nm;
    for (std::size_t p = 0; p < b.name.size(); ++p)
      if (b.name[p] >= '1' && b.name[p] <= '3') nm += names[b.name[p] - '1'];
    b.name = nm.empty() ? "1" : nm;
  }
  auto id = [&](const char* n) {
    for (std::size_t i = 0; i < g.basis.size(); ++i)
      if (g.basis[i].name == n) return static_cast<int>(i);
    return -1;
  };
  // d(z) = xy, d(xz) = -x(xy) = 0, d(yz) = -y(xy) = 0, d(xyz) = 0
  g.d[id("z")][id("xy")] = 1;
  return g;
}

/// Polynomial forms on I_t × S¹_θ modulo the d-stable ideal (t³, t²dt).
inline Dga interval_circle_dga() {
  struct Mono {
    int tp;
    bool dt, dth;
  };
  std::vector<Mono> monos = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0},
                             {0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  auto alive = [](int tp, bool dt) { return tp < 3 && !(tp >= 2 && dt); };
  auto name = [](const Mono& m) {
    std::string c = m.tp == 0 ? "" : (m.tp == 1 ? "t" : "t^" + std::to_string(m.tp));
    std::string f;
    if (m.dt) f = "dt";
    if (m.dth) f += f.empty() ? "dth" : "^dth";
    if (c.empty()) return f.empty() ? std::string("1") : f;
    return f.empty() ? c : c + "*" + f;
  };
  auto find = [&](int tp, bool dt, bool dth) {
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (monos[i].tp == tp && monos[i].dt == dt && monos[i].dth == dth) return static_cast<int>(i);
    return -1;
  };
  Dga g;
  g.component = {"IxS1", 2, 0, false};
  for (const auto& m : monos) g.basis.push_back({name(m), static_cast<long long>(m.dt) + m.dth});
  g.d.assign(monos.size(), {});
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const auto& m = monos[i];
    if (m.tp > 0 && !m.dt && alive(m.tp - 1, true)) g.d[i][find(m.tp - 1, true, m.dth)] = m.tp;
  }
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const auto &x = monos[i], &y = monos[j];
      if ((x.dt && y.dt) || (x.dth && y.dth)) continue;
      int tp = x.tp + y.tp;
      bool dt = x.dt || y.dt, dth = x.dth || y.dth;
      if (!alive(tp, dt)) continue;
      int s = (x.dth && y.dt) ? -1 : 1;  // dθ∧dt = −dt∧dθ
      g.mul[{static_cast<int>(i), static_cast<int>(j)}][find(tp, dt, dth)] = s;
    }
  return g;
}

inline std::vector<std::string> dga_preset_names() { return {"exterior4", "heisenberg3", "interval-circle"}; }

inline Dga dga_preset(std::string_view name) {
  if (name == "exterior4") return exterior_dga(4);
  if (name == "heisenberg3") return heisenberg_dga();
  if (name == "interval-circle") return interval_circle_dga();
  throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

/// Element from "name=novikov; name=novikov", all names in component `comp`.
inline Chain parse_chain(const FilteredAInfty& a, std::string_view text, int comp = 0) {
  Chain out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    pos = end + 1;
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return s;
    };
    part = trim(part);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("element term '" + std::string(part) + "' lacks '='");
    int idx = a.spaces().at(comp).index_of(trim(part.substr(0, eq)));
    add_to(out, BasisRef{comp, idx}, novikov::parse(trim(part.substr(eq + 1))));
  }
  return out;
}

}  // namespace bmsign::ainfty
