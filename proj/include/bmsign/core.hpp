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

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmsign {

inline constexpr const char* kVersion = "0.1.0";

/// Exact rational scalar used throughout (GMP `mpq_class`, always canonical).
using Rational = mpq_class;

/// A residue mod 2, stored as 0 or 1.
using Parity = int;

/// Reduces an arbitrary integer to its parity (correct for negatives).
constexpr Parity parity(long long n) noexcept { return static_cast<Parity>(((n % 2) + 2) % 2); }

/// Input text that does not follow a documented grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Arguments that violate an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `p`, `-p` or `p/q` into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InvalidArgument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && seen_digit && !seen_slash && i + 1 < s.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace bmsign
