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

#include "hka/error.hpp"
#include "hka/hankel.hpp"
#include "hka/oracle.hpp"
#include "support.hpp"

using namespace hka;

namespace {

// j_{m,l} mod 2 from scratch: cofactor expansion of the constraint matrix.
int naive_perm_mod2(const PatternVector& p, std::size_t m, std::size_t l, Family f) {
  const auto delta = testing::naive_delta(p, 2 * m + 1);
  std::vector<std::vector<int>> a(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const bool in_j = delta[i + j];
      a[i][j] = i == l ? 1 : (f == Family::J ? in_j : !in_j);
    }
  }
  return testing::cofactor_det_mod2(a);
}

}  // namespace

TEST_CASE("sequence names") {
  CHECK(sequence_name(SeqId::X) == 'X');
  CHECK(sequence_name(SeqId::W) == 'W');
  CHECK(sequence_from_name('V') == SeqId::V);
  CHECK_THROWS_AS(sequence_from_name('Q'), ValidationError);
}

TEST_CASE("permanent counts mod 2 against cofactor expansion and enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const PatternVector p = testing::random_pattern(rng);
    const JKClassifier c(p);
    for (std::size_t m = 0; m <= 7; ++m) {
      for (std::size_t l = 0; l <= m; ++l) {
        for (Family f : {Family::J, Family::K}) {
          const auto fast = perm_count_mod2(c, m, l, f);
          CHECK(fast == naive_perm_mod2(p, m, l, f));
          CHECK(fast == brute_perm_count(c, m, l, f) % 2);
        }
      }
    }
  }
}

TEST_CASE("oracle argument checks") {
  const JKClassifier c(PatternVector({1, -1}));
  CHECK_THROWS_AS(perm_count_mod2(c, 3, 4, Family::J), ArgumentError);
  CHECK_THROWS_AS(brute_perm_count(c, 9, 0, Family::J), ArgumentError);
  CHECK(perm_count_mod2(c, 0, 0, Family::K) == 1);
  CHECK(brute_perm_count(c, 0, 0, Family::K) == 1);
}

TEST_CASE("sextuple at n = 0") {
  const auto s = sextuple(JKClassifier(PatternVector({1, 1, -1})), 0);
  CHECK(s == KernelSextuple{0, 0, 1, 0, 0, 1, 0});
}

TEST_CASE("initial values of the two reference patterns") {
  for (const auto& v : {std::vector<int>{1, 1, -1, -1, 1}, std::vector<int>{1, 1, -1, -1}}) {
    const JKClassifier c{PatternVector(v)};
    const auto s0 = sextuple(c, 0);
    const auto s1 = sextuple(c, 1);
    CHECK(s0.x == 0);
    CHECK(s1.x == 1);
    CHECK(s0.y == 1);
    CHECK(s1.y == 0);
    CHECK(s0.z == 0);
    CHECK(s1.z == 1);
  }
}

TEST_CASE("kernel table equals the reference sextuple") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const PatternVector p = testing::random_pattern(rng);
    const JKClassifier c(p);
    const KernelTable table = KernelTable::compute(c, 40);
    REQUIRE(table.size() == 40);
    for (std::size_t n = 0; n < 40; ++n) CHECK(table.at(n) == sextuple(c, n));
  }
}

TEST_CASE("Z is the reduced Hankel determinant mod 2") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const PatternVector p = testing::random_pattern(rng);
    const KernelTable table = KernelTable::compute(JKClassifier(p), 200);
    for (std::size_t m = 0; m < 60; ++m) CHECK(table.value(SeqId::Z, m) == reduced_hankel_bit(p, m));
  }
}

TEST_CASE("sextuple accessors") {
  const KernelSextuple s{3, 1, 0, 1, 1, 0, 0};
  CHECK(s.get(SeqId::X) == 1);
  CHECK(s.get(SeqId::Y) == 0);
  CHECK(s.get(SeqId::Z) == 1);
  CHECK(s.get(SeqId::U) == 1);
  CHECK(s.get(SeqId::V) == 0);
  CHECK(s.get(SeqId::W) == 0);
}
