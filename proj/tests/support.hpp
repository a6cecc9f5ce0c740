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

// Seeded generators shared by the property tests.
#pragma once

#include <bmsign/novikov.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace bmsign::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long num_bound = 5, long den_bound = 4) {
    Rational r(integer(-num_bound, num_bound), integer(1, den_bound));
    r.canonicalize();
    return r;
  }
  Rational nonneg_rational(long num_bound = 6, long den_bound = 3) {
    Rational r(integer(0, num_bound), integer(1, den_bound));
    r.canonicalize();
    return r;
  }

  /// Up to max_terms terms; zero is produced with small but positive probability.
  novikov::NovikovElement novikov(int max_terms = 4) {
    std::vector<novikov::NovikovElement::Term> ts;
    int n = static_cast<int>(integer(0, max_terms));
    for (int i = 0; i < n; ++i) ts.push_back({nonneg_rational(), rational()});
    return novikov::NovikovElement::from_terms(std::move(ts));
  }
  novikov::NovikovElement nonzero_novikov(int max_terms = 4) {
    for (;;) {
      auto x = novikov(max_terms);
      if (!x.is_zero()) return x;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bmsign::testing
