// Copyright 2026 The hka Authors
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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hka {

using Sign = std::int8_t;

// The defining data (d, v) of one member of the product family: a sign word
// of length d >= 2 starting with +1.
class PatternVector {
 public:
  // Throws ValidationError unless signs.size() >= 2, signs[0] == 1 and every
  // entry is +1 or -1.
  explicit PatternVector(std::vector<int> signs);

  // Parses a comma-separated list such as "1,1,-1,-1,1". Whitespace around
  // entries is ignored; "+1" is accepted.
  static PatternVector parse(std::string_view text);

  unsigned base() const noexcept { return static_cast<unsigned>(signs_.size()); }
  std::span<const Sign> signs() const noexcept { return signs_; }
  Sign operator[](std::size_t i) const { return signs_[i]; }
  Sign last() const noexcept { return signs_.back(); }

  // True when v has no -1 entry (f is then the constant sequence 1).
  bool is_constant() const noexcept;

  // "1,1,-1,-1,1"
  std::string to_string() const;

  friend bool operator==(const PatternVector&, const PatternVector&) = default;

 private:
  std::vector<Sign> signs_;
};

struct SignPrefix {
  std::vector<Sign> terms;
};

// First n terms of f, built from f_0 = 1 and f_{dn+i} = v_i f_n.
SignPrefix f_prefix(const PatternVector& pattern, std::size_t n);

// Single term of f from the digit-product formula prod_i v_i^{s_{d,i}(n)}.
Sign f_term(const PatternVector& pattern, std::uint64_t n);

// Number of occurrences of digit i in the base-d expansion of n (0 has the
// empty expansion).
unsigned digit_count(unsigned d, unsigned i, std::uint64_t n);

// |(f_t - f_{t+1}) / 2|.
std::uint8_t delta(const PatternVector& pattern, std::uint64_t t);

// Digit-combinatorial description of the sets J and K. Every nonnegative
// integer lies in exactly one of them.
class JKClassifier {
 public:
  explicit JKClassifier(PatternVector pattern);

  const PatternVector& pattern() const noexcept { return pattern_; }

  // p in P iff v_{p-1} != v_p; Q is the complement within {1, ..., d-1}.
  bool in_P(unsigned digit) const { return in_p_.at(digit); }
  bool in_Q(unsigned digit) const { return digit >= 1 && !in_p_.at(digit); }

  bool in_J(std::uint64_t t) const;
  bool in_K(std::uint64_t t) const { return !in_J(t); }

  // [t in J] for t < count.
  std::vector<std::uint8_t> j_indicator(std::size_t count) const;

 private:
  PatternVector pattern_;
  std::vector<bool> in_p_;
};

}  // namespace hka
