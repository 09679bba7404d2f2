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

#include "hka/pattern.hpp"

#include <charconv>
#include <sstream>

#include "hka/error.hpp"

namespace hka {

const char* to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::validation: return "validation";
    case Stage::argument: return "argument";
    case Stage::mining: return "mining";
    case Stage::automaton: return "automaton";
    case Stage::substitution: return "substitution";
    case Stage::exponent: return "exponent";
    case Stage::internal: return "internal";
  }
  return "unknown";
}

PatternVector::PatternVector(std::vector<int> signs) {
  if (signs.size() < 2) {
    throw ValidationError("pattern must have length d >= 2, got " + std::to_string(signs.size()));
  }
  if (signs[0] != 1) throw ValidationError("pattern must start with 1");
  signs_.reserve(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) {
      throw ValidationError("pattern entry " + std::to_string(i) + " is " +
                            std::to_string(signs[i]) + ", expected 1 or -1");
    }
    signs_.push_back(static_cast<Sign>(signs[i]));
  }
}

PatternVector PatternVector::parse(std::string_view text) {
  std::vector<int> signs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw ValidationError("cannot parse pattern entry '" + std::string(item) + "'");
    }
    signs.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return PatternVector(std::move(signs));
}

bool PatternVector::is_constant() const noexcept {
  for (Sign s : signs_) {
    if (s != 1) return false;
  }
  return true;
}

std::string PatternVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i) out << ',';
    out << static_cast<int>(signs_[i]);
  }
  return out.str();
}

SignPrefix f_prefix(const PatternVector& pattern, std::size_t n) {
  SignPrefix prefix;
  prefix.terms.resize(n);
  const unsigned d = pattern.base();
  if (n > 0) prefix.terms[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    prefix.terms[k] = static_cast<Sign>(pattern[k % d] * prefix.terms[k / d]);
  }
  return prefix;
}

Sign f_term(const PatternVector& pattern, std::uint64_t n) {
  const unsigned d = pattern.base();
  Sign result = 1;
  for (; n > 0; n /= d) result = static_cast<Sign>(result * pattern[n % d]);
  return result;
}

unsigned digit_count(unsigned d, unsigned i, std::uint64_t n) {
  if (d < 2 || i >= d) throw ArgumentError("digit_count requires d >= 2 and 0 <= i < d");
  unsigned count = 0;
  for (; n > 0; n /= d) count += (n % d == i);
  return count;
}

std::uint8_t delta(const PatternVector& pattern, std::uint64_t t) {
  return f_term(pattern, t) != f_term(pattern, t + 1) ? 1 : 0;
}

JKClassifier::JKClassifier(PatternVector pattern)
    : pattern_(std::move(pattern)), in_p_(pattern_.base(), false) {
  for (unsigned i = 1; i < pattern_.base(); ++i) in_p_[i] = pattern_[i - 1] != pattern_[i];
}

bool JKClassifier::in_J(std::uint64_t t) const {
  // t + 1 = (d n + r) d^k with r the lowest nonzero digit.
  const unsigned d = pattern_.base();
  std::uint64_t x = t + 1;
  unsigned k = 0;
  while (x % d == 0) {
    x /= d;
    ++k;
  }
  const bool r_in_p = in_p_[x % d];
  if (pattern_.last() == 1) return r_in_p;
  return (k % 2 == 0) ? r_in_p : !r_in_p;
}

std::vector<std::uint8_t> JKClassifier::j_indicator(std::size_t count) const {
  std::vector<std::uint8_t> bits(count);
  for (std::size_t t = 0; t < count; ++t) bits[t] = in_J(t) ? 1 : 0;
  return bits;
}

}  // namespace hka
