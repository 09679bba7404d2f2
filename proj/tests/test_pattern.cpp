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
#include "hka/pattern.hpp"
#include "support.hpp"

using namespace hka;

TEST_CASE("pattern parsing and validation") {
  const PatternVector p = PatternVector::parse("1, 1,-1, -1,+1");
  CHECK(p.base() == 5);
  CHECK(p.to_string() == "1,1,-1,-1,1");
  CHECK(p.last() == 1);
  CHECK_FALSE(p.is_constant());
  CHECK(PatternVector::parse("1,1,1").is_constant());

  CHECK_THROWS_AS(PatternVector::parse("1"), ValidationError);
  CHECK_THROWS_AS(PatternVector::parse("-1,1"), ValidationError);
  CHECK_THROWS_AS(PatternVector::parse("1,2"), ValidationError);
  CHECK_THROWS_AS(PatternVector::parse("1,0"), ValidationError);
  CHECK_THROWS_AS(PatternVector::parse("1,,1"), ValidationError);
  CHECK_THROWS_AS(PatternVector::parse("1,x"), ValidationError);
  CHECK_THROWS_AS(PatternVector::parse(""), ValidationError);
  CHECK_THROWS_AS(PatternVector({1}), ValidationError);
}

TEST_CASE("f prefix of the five-letter example") {
  const PatternVector p({1, 1, -1, -1, 1});
  const auto f = f_prefix(p, 10).terms;
  const std::vector<Sign> expected{1, 1, -1, -1, 1, 1, 1, -1, -1, 1};
  CHECK(f == expected);
  CHECK(f_prefix(p, 0).terms.empty());
}

TEST_CASE("Thue-Morse prefix") {
  const auto f = f_prefix(PatternVector({1, -1}), 8).terms;
  CHECK(f == std::vector<Sign>{1, -1, -1, 1, -1, 1, 1, -1});
}

TEST_CASE("digit counts") {
  CHECK(digit_count(5, 0, 0) == 0);
  CHECK(digit_count(5, 3, 0) == 0);
  CHECK(digit_count(2, 1, 0b1011) == 3);
  CHECK(digit_count(2, 0, 0b1011) == 1);
  CHECK(digit_count(10, 7, 7707) == 3);
  CHECK_THROWS_AS(digit_count(1, 0, 5), ArgumentError);
  CHECK_THROWS_AS(digit_count(3, 3, 5), ArgumentError);
}

TEST_CASE("property: f_term, f_prefix and block substitution agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const PatternVector p = testing::random_pattern(rng, 2, 7);
    const auto naive = testing::naive_f(p, 3000);
    const auto prefix = f_prefix(p, 3000).terms;
    for (std::size_t n = 0; n < naive.size(); ++n) {
      REQUIRE(prefix[n] == naive[n]);
      REQUIRE(f_term(p, n) == naive[n]);
    }
    const unsigned d = p.base();
    for (std::uint64_t n = 0; n < 500; ++n) {
      for (unsigned i = 0; i < d; ++i) REQUIRE(f_term(p, d * n + i) == p[i] * f_term(p, n));
    }
  }
}

TEST_CASE("J/K classifier matches the delta definition") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const PatternVector p = testing::random_pattern(rng, 2, 8);
    const JKClassifier c(p);
    const auto delta_ref = testing::naive_delta(p, 20000);
    const auto indicator = c.j_indicator(20000);
    for (std::size_t t = 0; t < delta_ref.size(); ++t) {
      REQUIRE(c.in_J(t) == bool(delta_ref[t]));
      REQUIRE(c.in_K(t) == !c.in_J(t));
      REQUIRE(indicator[t] == delta_ref[t]);
      REQUIRE(delta(p, t) == delta_ref[t]);
    }
  }
}

TEST_CASE("P and Q sets") {
  const JKClassifier c(PatternVector({1, 1, -1, -1, 1}));
  CHECK_FALSE(c.in_P(1));
  CHECK(c.in_P(2));
  CHECK_FALSE(c.in_P(3));
  CHECK(c.in_P(4));
  CHECK(c.in_Q(1));
  CHECK(c.in_Q(3));
  CHECK_FALSE(c.in_Q(0));
  CHECK_FALSE(c.in_Q(2));
}

TEST_CASE("constant pattern has J empty") {
  const JKClassifier c(PatternVector({1, 1, 1}));
  for (std::uint64_t t = 0; t < 1000; ++t) CHECK(c.in_K(t));
}
