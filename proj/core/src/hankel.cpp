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

#include "hka/hankel.hpp"

#include <utility>

#include "hka/error.hpp"
#include "hka/gf2.hpp"

namespace hka {

BigInt hankel_exact(std::span<const BigInt> seq, std::size_t n) {
  if (n == 0) return BigInt(1);
  if (seq.size() < 2 * n - 1) {
    throw ArgumentError("hankel_exact of order " + std::to_string(n) + " needs " +
                        std::to_string(2 * n - 1) + " terms, got " + std::to_string(seq.size()));
  }
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = seq[i + j];
  }
  // Bareiss: after step k every entry a[i][j] (i, j > k) is a (k+2)-minor.
  BigInt previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return BigInt(0);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  return negate ? BigInt(-det) : det;
}

BigInt hankel_exact(std::span<const Sign> seq, std::size_t n) {
  std::vector<BigInt> wide(seq.begin(), seq.end());
  return hankel_exact(std::span<const BigInt>(wide), n);
}

std::uint8_t reduced_hankel_bit(const PatternVector& pattern, std::size_t m) {
  if (m == 0) return 0;
  const SignPrefix f = f_prefix(pattern, 2 * m);
  gf2::Matrix rows(m, gf2::BitVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j + 1 < m; ++j) rows[i].set(j, f.terms[i + j] != f.terms[i + j + 1]);
    rows[i].set(m - 1);
  }
  return gf2::determinant(std::move(rows)) ? 1 : 0;
}

HankelPrefix hankel_prefix_exact(const PatternVector& pattern, std::size_t count) {
  if (count == 0) throw ArgumentError("hankel prefix count must be >= 1");
  const SignPrefix f = f_prefix(pattern, 2 * count);
  HankelPrefix prefix;
  prefix.values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) prefix.values.push_back(hankel_exact(std::span<const Sign>(f.terms), n));
  return prefix;
}

std::vector<std::uint8_t> hankel_prefix_mod2(const PatternVector& pattern, std::size_t count) {
  if (count == 0) throw ArgumentError("hankel prefix count must be >= 1");
  std::vector<std::uint8_t> bits(count);
  for (std::size_t m = 0; m < count; ++m) bits[m] = reduced_hankel_bit(pattern, m);
  return bits;
}

}  // namespace hka
