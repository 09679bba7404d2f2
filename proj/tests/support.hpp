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

// Independent reference computations for the unit tests. Nothing here calls
// into the library's own algorithms beyond the data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hka/pattern.hpp"

namespace hka::testing {

inline PatternVector random_pattern(std::mt19937_64& rng, unsigned d_min = 2, unsigned d_max = 6,
                                    bool require_minus = false) {
  std::uniform_int_distribution<unsigned> pick_d(d_min, d_max);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<int> v(pick_d(rng), 1);
    bool minus = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
      v[i] = coin(rng) ? 1 : -1;
      minus |= v[i] < 0;
    }
    if (minus || !require_minus) return PatternVector(v);
  }
}

// f by repeated block substitution: f = f_0 f_1 ... with f_{dn+i} = v_i f_n.
inline std::vector<int> naive_f(const PatternVector& p, std::size_t count) {
  std::vector<int> f{1};
  while (f.size() < count) {
    std::vector<int> next;
    for (int x : f) {
      for (std::size_t i = 0; i < p.base(); ++i) next.push_back(x * p[i]);
    }
    f.swap(next);
  }
  f.resize(count);
  return f;
}

inline std::vector<std::uint8_t> naive_delta(const PatternVector& p, std::size_t count) {
  const auto f = naive_f(p, count + 1);
  std::vector<std::uint8_t> out(count);
  for (std::size_t t = 0; t < count; ++t) out[t] = f[t] != f[t + 1];
  return out;
}

// Leibniz expansion; fine up to n = 8.
inline long long leibniz_det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < n && term; ++i) term *= a[i][perm[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline long long naive_hankel(const std::vector<int>& c, std::size_t n) {
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = c[i + j];
  }
  return leibniz_det(a);
}

// GF(2) determinant by cofactor expansion along the first row; n <= 10.
inline int cofactor_det_mod2(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(a[0][j] & 1)) continue;
    std::vector<std::vector<int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<int> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    total ^= cofactor_det_mod2(minor);
  }
  return total;
}

}  // namespace hka::testing
