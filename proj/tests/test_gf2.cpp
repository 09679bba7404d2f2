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

#include <doctest.h>

#include <random>

#include "hka/gf2.hpp"
#include "support.hpp"

using namespace hka;
using hka::gf2::BitVector;

namespace {

gf2::Matrix to_matrix(const std::vector<std::vector<int>>& a) {
  gf2::Matrix m;
  for (const auto& row : a) {
    BitVector v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) v.set(j, row[j] & 1);
    m.push_back(v);
  }
  return m;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v(130);
  CHECK(v.none());
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.find_next(1) == 64);
  CHECK(v.find_next(65) == 129);
  v.flip(129);
  CHECK(v.find_next(65) == 130);
  v.fill(true);
  CHECK(v.count() == 130);
  BitVector w(130);
  w.set(5);
  w.set(70);
  CHECK(v.dot(w) == false);
  w.set(71);
  CHECK(v.dot(w) == true);
  v ^= w;
  CHECK(v.count() == 127);
  CHECK(BitVector(3) == BitVector(3));
  CHECK_FALSE(BitVector(3) == BitVector(4));
}

TEST_CASE("determinant and rank against cofactor expansion") {
  std::mt19937_64 rng(21);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = trial % 9;
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (auto& row : a) {
      for (auto& x : row) x = coin(rng);
    }
    const int expected = testing::cofactor_det_mod2(a);
    CHECK(gf2::determinant(to_matrix(a)) == bool(expected));
    CHECK((gf2::rank(to_matrix(a)) == n) == bool(expected));
  }
}

TEST_CASE("rank of structured matrices") {
  CHECK(gf2::rank(to_matrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
  CHECK(gf2::rank(to_matrix({{0, 0}, {0, 0}})) == 0);
  CHECK(gf2::determinant(gf2::Matrix{}) == true);
}

TEST_CASE("matrix-vector products") {
  const auto m = to_matrix({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  BitVector r(3);
  r.set(0);
  r.set(2);
  // row (1,0,1) times m = row0 + row2 = (0,1,1)
  const BitVector rm = gf2::multiply(r, m);
  CHECK(!rm.get(0));
  CHECK(rm.get(1));
  CHECK(rm.get(2));
  // m times column (1,0,1) = (0, 1, 1)
  const BitVector mc = gf2::multiply(m, r);
  CHECK(!mc.get(0));
  CHECK(mc.get(1));
  CHECK(mc.get(2));
}

TEST_CASE("Berlekamp-Massey Hankel table equals direct elimination") {
  std::mt19937_64 rng(22);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution sparse(0.1);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t order = 1 + trial * 2;
    BitVector s(2 * order + trial % 3);
    for (std::size_t i = 0; i < s.size(); ++i) s.set(i, trial % 2 ? coin(rng) : sparse(rng));
    CHECK(gf2::hankel_determinants(s, order) == gf2::hankel_determinants_direct(s, order));
  }
}

TEST_CASE("Hankel table of structured sequences") {
  BitVector zero(40);
  const auto h0 = gf2::hankel_determinants(zero, 20);
  CHECK(h0[0] == 1);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(h0[n] == 0);

  // 1, 0, 0, ...: only the 1x1 matrix is nonsingular among n >= 1.
  BitVector impulse(40);
  impulse.set(0);
  const auto h1 = gf2::hankel_determinants(impulse, 20);
  CHECK(h1[1] == 1);
  for (std::size_t n = 2; n <= 20; ++n) CHECK(h1[n] == 0);

  // Small example checked by cofactor expansion.
  BitVector s(16);
  for (std::size_t i : {1, 2, 5, 6, 9}) s.set(i);
  const auto fast = gf2::hankel_determinants(s, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = s.get(i + j);
    }
    CHECK(fast[n] == testing::cofactor_det_mod2(a));
  }
}
