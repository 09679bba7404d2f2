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
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hka::gf2 {

// Fixed-length vector over GF(2), packed 64 bits per word. Bits past size()
// in the last word are kept zero so that word-wise equality and hashing work.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void fill(bool value);
  bool none() const noexcept;
  std::size_t count() const noexcept;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);

  // Parity of the dot product <this, other>.
  bool dot(const BitVector& other) const;

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

// Square matrix stored as rows; rows.size() columns per row are expected.
using Matrix = std::vector<BitVector>;

// Determinant over GF(2) by Gaussian elimination. The argument is consumed.
bool determinant(Matrix rows);

std::size_t rank(Matrix rows);

// Row vector times matrix: XOR of the rows of `m` selected by `row`.
BitVector multiply(const BitVector& row, const Matrix& m);

// Matrix times column vector.
BitVector multiply(const Matrix& m, const BitVector& column);

// For a sequence s over GF(2), returns H_0(s), ..., H_max_order(s) where
// H_n is the determinant of the n x n Hankel matrix (s_{i+j}). H_0 = 1.
// The normal indices (H_n = 1) are exactly the values taken by the linear
// complexity profile, which Berlekamp-Massey tracks in O(N^2 / 64).
// Requires seq.size() >= 2 * max_order.
std::vector<std::uint8_t> hankel_determinants(const BitVector& seq, std::size_t max_order);

// Same quantity by direct elimination of each Hankel matrix. O(N^4 / 64);
// kept as an independent check of the fast path.
std::vector<std::uint8_t> hankel_determinants_direct(const BitVector& seq, std::size_t max_order);

}  // namespace hka::gf2
