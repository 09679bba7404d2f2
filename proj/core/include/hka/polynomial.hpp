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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hka/oracle.hpp"

namespace hka {

// A generator is S, sigma S or sigma^2 S for S in {X, ..., W}, i.e. the
// sequence n -> S(n + shift). Encoded as shift * 6 + sequence.
struct Generator {
  SeqId seq = SeqId::X;
  unsigned shift = 0;

  unsigned index() const noexcept { return shift * 6 + static_cast<unsigned>(seq); }
  static Generator from_index(unsigned index) noexcept {
    return Generator{static_cast<SeqId>(index % 6), index / 6};
  }
  // "X_n", "Z_{n+1}", "W_{n+2}"
  std::string name() const;
  static Generator parse(std::string_view text);

  friend bool operator==(const Generator&, const Generator&) = default;
};

inline constexpr unsigned kRelationGenerators = 12;   // S and sigma S
inline constexpr unsigned kAutomatonGenerators = 18;  // S, sigma S, sigma^2 S

// Squarefree product of generators. The sequences take values in {0, 1}, so
// g * g = g and a monomial is just a set of generators; the empty set is 1.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint32_t mask) : mask_(mask) {}
  static Monomial of(Generator g) { return Monomial(std::uint32_t{1} << g.index()); }

  std::uint32_t mask() const noexcept { return mask_; }
  unsigned degree() const noexcept;
  bool is_constant() const noexcept { return mask_ == 0; }
  std::vector<Generator> generators() const;
  unsigned max_shift() const noexcept;

  Monomial operator*(Monomial other) const noexcept { return Monomial(mask_ | other.mask_); }

  std::string to_string() const;

  friend bool operator==(Monomial, Monomial) = default;

 private:
  std::uint32_t mask_ = 0;
};

// Canonical order: by degree, then lexicographically on the ascending list of
// generator indices.
bool monomial_less(Monomial a, Monomial b) noexcept;

// GF(2) sum of distinct monomials, kept sorted in canonical order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> terms);  // duplicates cancel in pairs
  static Polynomial one() { return Polynomial({Monomial()}); }
  static Polynomial of(Generator g) { return Polynomial({Monomial::of(g)}); }

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const noexcept;
  unsigned max_shift() const noexcept;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  // Replaces every generator S_{n+k} by S_{n+k+1}. Throws StructuralError if
  // that would need a shift beyond 2.
  Polynomial shifted() const;

  // Evaluates with generator values supplied by `value(Generator) -> 0/1`.
  template <typename ValueFn>
  std::uint8_t evaluate(ValueFn&& value) const {
    std::uint8_t sum = 0;
    for (Monomial m : terms_) {
      std::uint8_t prod = 1;
      for (std::uint32_t mask = m.mask(); mask && prod; mask &= mask - 1) {
        prod &= value(Generator::from_index(static_cast<unsigned>(std::countr_zero(mask))));
      }
      sum ^= prod;
    }
    return sum;
  }

  // "0", "1", or sums like "Z_{n+1} Y_n + X_n"; the inverse of parse().
  std::string to_string() const;
  static Polynomial parse(std::string_view text);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Monomial> terms_;
};

}  // namespace hka
