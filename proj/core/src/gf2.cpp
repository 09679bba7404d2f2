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

#include "hka/gf2.hpp"

#include <algorithm>
#include <utility>

#include "hka/error.hpp"

namespace hka::gf2 {

void BitVector::fill(bool value) {
  std::fill(words_.begin(), words_.end(), value ? ~std::uint64_t{0} : 0);
  if (value && (size_ & 63)) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) return std::min(size_, (w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::size_t BitVector::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

bool determinant(Matrix rows) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !rows[pivot].get(col)) ++pivot;
    if (pivot == n) return false;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r].get(col)) rows[r] ^= rows[col];
    }
  }
  return true;
}

std::size_t rank(Matrix rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i].get(col)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

BitVector multiply(const BitVector& row, const Matrix& m) {
  BitVector out(m.empty() ? 0 : m.front().size());
  for (std::size_t i = row.find_next(0); i < row.size(); i = row.find_next(i + 1)) out ^= m[i];
  return out;
}

BitVector multiply(const Matrix& m, const BitVector& column) {
  BitVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out.set(i, m[i].dot(column));
  return out;
}

namespace {

// 64 bits of `v` starting at bit `offset`; bits past the end read as zero.
std::uint64_t window(std::span<const std::uint64_t> v, std::size_t offset) {
  const std::size_t w = offset >> 6;
  const unsigned shift = offset & 63;
  if (w >= v.size()) return 0;
  std::uint64_t lo = v[w] >> shift;
  if (shift && w + 1 < v.size()) lo |= v[w + 1] << (64 - shift);
  return lo;
}

// target ^= source << shift, touching only words that can be nonzero.
void xor_shifted(std::vector<std::uint64_t>& target, const std::vector<std::uint64_t>& source,
                 std::size_t source_bits, std::size_t shift) {
  const std::size_t word_shift = shift >> 6;
  const unsigned bit_shift = shift & 63;
  const std::size_t source_words = std::min(source.size(), (source_bits + 64) / 64);
  for (std::size_t i = 0; i < source_words; ++i) {
    const std::uint64_t w = source[i];
    if (!w) continue;
    const std::size_t t = i + word_shift;
    if (t < target.size()) target[t] ^= w << bit_shift;
    if (bit_shift && t + 1 < target.size()) target[t + 1] ^= w >> (64 - bit_shift);
  }
}

}  // namespace

std::vector<std::uint8_t> hankel_determinants(const BitVector& seq, std::size_t max_order) {
  if (seq.size() < 2 * max_order) {
    throw ArgumentError("hankel_determinants needs 2*max_order sequence terms");
  }
  std::vector<std::uint8_t> result(max_order + 1, 0);
  result[0] = 1;

  // Reversed copy so that s_k, s_{k-1}, ..., s_{k-L} is a contiguous window.
  const std::size_t len = seq.size();
  BitVector reversed(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (seq.get(i)) reversed.set(len - 1 - i);
  }
  const std::size_t words = (len + 64) / 64 + 1;
  std::vector<std::uint64_t> conn(words, 0), prev(words, 0), scratch;
  conn[0] = 1;
  prev[0] = 1;
  std::size_t complexity = 0;  // degree bound of conn
  std::size_t prev_degree = 0;
  std::size_t gap = 1;
  const auto rev = reversed.words();

  for (std::size_t k = 0; k < len; ++k) {
    // discrepancy = sum_{i=0}^{L} conn_i s_{k-i}; s_{k-i} = reversed[len-1-k+i].
    const std::size_t base = len - 1 - k;
    std::uint64_t acc = 0;
    const std::size_t conn_words = complexity / 64 + 1;
    for (std::size_t w = 0; w < conn_words; ++w) acc ^= conn[w] & window(rev, base + 64 * w);
    if ((std::popcount(acc) & 1) == 0) {
      ++gap;
      continue;
    }
    if (2 * complexity <= k) {
      scratch = conn;
      xor_shifted(conn, prev, prev_degree, gap);
      prev.swap(scratch);
      prev_degree = complexity;
      complexity = k + 1 - complexity;
      gap = 1;
      if (complexity <= max_order) result[complexity] = 1;
    } else {
      xor_shifted(conn, prev, prev_degree, gap);
      ++gap;
    }
  }
  return result;
}

std::vector<std::uint8_t> hankel_determinants_direct(const BitVector& seq, std::size_t max_order) {
  if (seq.size() < 2 * max_order) {
    throw ArgumentError("hankel_determinants_direct needs 2*max_order sequence terms");
  }
  std::vector<std::uint8_t> result(max_order + 1, 0);
  result[0] = 1;
  for (std::size_t n = 1; n <= max_order; ++n) {
    Matrix rows(n, BitVector(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i].set(j, seq.get(i + j));
    }
    result[n] = determinant(std::move(rows)) ? 1 : 0;
  }
  return result;
}

}  // namespace hka::gf2
