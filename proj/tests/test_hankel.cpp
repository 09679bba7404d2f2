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
#include "support.hpp"

using namespace hka;

TEST_CASE("reference Hankel table, five-letter pattern") {
  const auto h = hankel_prefix_exact(PatternVector({1, 1, -1, -1, 1}), 15).values;
  const std::vector<long long> expected{1, 1, -2, 0, 0, 16, -32, -128, 256, -1280, -6656, 0, 0, 0, 0};
  REQUIRE(h.size() == expected.size());
  for (std::size_t n = 0; n < h.size(); ++n) CHECK(h[n] == expected[n]);
  const std::vector<std::uint8_t> u{0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0};
  CHECK(hankel_prefix_mod2(PatternVector({1, 1, -1, -1, 1}), 15) == u);
}

TEST_CASE("reference Hankel table, four-letter pattern") {
  const auto h = hankel_prefix_exact(PatternVector({1, 1, -1, -1}), 16).values;
  const std::vector<long long> expected{1, 1, -2, 0, 0, 0, 0, 64, 128, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t n = 0; n < h.size(); ++n) CHECK(h[n] == expected[n]);
  const std::vector<std::uint8_t> u{0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0};
  CHECK(hankel_prefix_mod2(PatternVector({1, 1, -1, -1}), 16) == u);
}

TEST_CASE("Bareiss agrees with the Leibniz expansion") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = trial % 8;
    std::vector<int> c(2 * n + 1);
    for (auto& x : c) x = entry(rng);
    std::vector<BigInt> big(c.begin(), c.end());
    CHECK(hankel_exact(std::span<const BigInt>(big), n) == testing::naive_hankel(c, n));
  }
}

TEST_CASE("pivoting: leading zero entries") {
  // c_0 = 0 forces a row swap at the first step.
  std::vector<BigInt> c{0, 1, 0, 1, 1};
  CHECK(hankel_exact(std::span<const BigInt>(c), 2) == -1);
  CHECK(hankel_exact(std::span<const BigInt>(c), 3) == testing::naive_hankel({0, 1, 0, 1, 1}, 3));
}

TEST_CASE("edge cases") {
  std::vector<Sign> one{1};
  CHECK(hankel_exact(std::span<const Sign>(one), 0) == 1);
  CHECK(hankel_exact(std::span<const Sign>(one), 1) == 1);
  CHECK_THROWS_AS(hankel_exact(std::span<const Sign>(one), 2), ArgumentError);
  const PatternVector p({1, -1});
  CHECK(reduced_hankel_bit(p, 0) == 0);
  CHECK_THROWS_AS(hankel_prefix_exact(p, 0), ArgumentError);
  CHECK_THROWS_AS(hankel_prefix_mod2(p, 0), ArgumentError);
}

TEST_CASE("property: reduced bit equals the exact quotient mod 2") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    const PatternVector p = testing::random_pattern(rng);
    const auto exact = hankel_prefix_exact(p, 21).values;
    for (std::size_t m = 1; m <= 20; ++m) {
      const BigInt scale = BigInt(1) << (m - 1);
      REQUIRE(exact[m] % scale == 0);
      const int bit = static_cast<int>(abs(exact[m] / scale) % 2);
      CHECK(reduced_hankel_bit(p, m) == bit);
    }
  }
}

TEST_CASE("property: 2^(n-1) divides H_n of any +-1 sequence") {
  std::mt19937_64 rng(33);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Sign> s(25);
    for (auto& x : s) x = coin(rng) ? 1 : -1;
    for (std::size_t n = 1; n <= 13; ++n) {
      CHECK(hankel_exact(std::span<const Sign>(s), n) % (BigInt(1) << (n - 1)) == 0);
    }
  }
}
