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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hka/pattern.hpp"

namespace hka {

// The six mod-2 permutation-count sequences X, Y, Z (built on J) and
// U, V, W (built on K). Z is the reduced Hankel determinant mod 2.
enum class SeqId : std::uint8_t { X = 0, Y = 1, Z = 2, U = 3, V = 4, W = 5 };

inline constexpr std::size_t kSequenceCount = 6;
inline constexpr std::array<SeqId, kSequenceCount> kAllSequences = {SeqId::X, SeqId::Y, SeqId::Z,
                                                                   SeqId::U, SeqId::V, SeqId::W};

char sequence_name(SeqId id) noexcept;
// Throws ValidationError for anything other than X, Y, Z, U, V, W.
SeqId sequence_from_name(char name);

enum class Family : std::uint8_t { J, K };

struct KernelSextuple {
  std::size_t n = 0;
  std::uint8_t x = 0, y = 0, z = 0, u = 0, v = 0, w = 0;

  std::uint8_t get(SeqId id) const noexcept;
  friend bool operator==(const KernelSextuple&, const KernelSextuple&) = default;
};

// j_{m,l} mod 2 (or k_{m,l}): permanent of the m x m 0/1 matrix with rows
// [i + j in J] for i != l and row l all ones, taken as a GF(2) determinant.
// l = m frees no row. Throws ArgumentError if l > m.
std::uint8_t perm_count_mod2(const JKClassifier& classifier, std::size_t m, std::size_t freed_row,
                             Family which);

// Exact count of permutations s of {0..m-1} with i + s(i) in the chosen set
// for every i != l, by enumeration. Refuses m > 8.
std::uint64_t brute_perm_count(const JKClassifier& classifier, std::size_t m, std::size_t freed_row,
                               Family which);

// Reference evaluation of (X, Y, Z, U, V, W)(n): X_n and U_n are sums of n
// separate determinants. Cost grows like n^4 / 64.
KernelSextuple sextuple(const JKClassifier& classifier, std::size_t n);

// All six sequences for n < size(), via determinant identities that reduce
// every entry to a plain GF(2) Hankel determinant:
//   Y_n = H_n([t in J]),  V_n = H_n([t in K]),
//   Z_n = W_n = H_{n-1}([t in J] + [t+1 in J])  (n >= 1),
//   X_n = U_n = Y_n + V_n,
// with all Hankel determinants taken from one Berlekamp-Massey pass each.
class KernelTable {
 public:
  KernelTable() = default;
  static KernelTable compute(const JKClassifier& classifier, std::size_t count);

  std::size_t size() const noexcept { return size_; }
  std::uint8_t value(SeqId id, std::size_t n) const { return values_[static_cast<std::size_t>(id)].at(n); }
  const std::vector<std::uint8_t>& sequence(SeqId id) const {
    return values_[static_cast<std::size_t>(id)];
  }
  KernelSextuple at(std::size_t n) const;

 private:
  std::size_t size_ = 0;
  std::array<std::vector<std::uint8_t>, kSequenceCount> values_;
};

}  // namespace hka
