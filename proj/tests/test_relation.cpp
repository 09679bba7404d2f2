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
#include "hka/relation.hpp"
#include "support.hpp"

using namespace hka;

namespace {

const PatternVector kEx1({1, 1, -1, -1, 1});
const PatternVector kEx2({1, 1, -1, -1});

// Reference relations, products expanded. For the four-letter pattern the
// source lists the last two Z lines under residue 1; they belong to 2 and 3.
const std::vector<std::vector<std::string>> kEx1Reference{
    {"X_n", "Z_{n+1} Y_n", "0", "0", "Z_{n+1} Y_{n+1}"},
    {"Y_n", "Z_{n+1} X_n Y_n + Z_{n+1} X_n", "Z_{n+1} Y_n", "Z_{n+1} Y_{n+1}",
     "Z_{n+1} X_{n+1} Y_{n+1} + Z_{n+1} X_{n+1}"},
    {"Z_n X_n + Z_n X_n Y_n + Z_n Y_n", "Z_{n+1} X_n + Z_{n+1} X_n Y_n + Z_{n+1} Y_n", "Z_{n+1} Y_n", "0",
     "Z_{n+1} Y_{n+1}"}};

const std::vector<std::vector<std::string>> kEx2Reference{
    {"0", "W_{n+1} U_n + W_{n+1} V_n", "0", "W_{n+1} U_{n+1} + W_{n+1} V_{n+1}"},
    {"U_n + V_n", "0", "W_{n+1}", "0"},
    {"W_n U_n + W_n V_n", "W_{n+1} U_n + W_{n+1} V_n", "W_{n+1} U_n + W_{n+1} V_n",
     "W_{n+1} U_{n+1} + W_{n+1} V_{n+1}"},
    {"0", "Z_{n+1} Y_n", "0", "Z_{n+1} Y_{n+1}"},
    {"Y_n", "Z_{n+1} Y_n", "Z_{n+1}", "Z_{n+1} Y_{n+1}"},
    {"Z_n Y_n", "Z_{n+1} Y_n", "Z_{n+1} Y_n", "Z_{n+1} Y_{n+1}"}};

// First n < limit where S_{dn+j} differs from rhs(n), or limit.
std::size_t first_failure(const KernelTable& t, unsigned d, SeqId s, unsigned j, const Polynomial& rhs,
                          std::size_t limit) {
  for (std::size_t n = 0; n < limit; ++n) {
    if (evaluate_rhs(rhs, t, n) != t.value(s, d * n + j)) return n;
  }
  return limit;
}

}  // namespace

TEST_CASE("mined five-letter system agrees with the reference one") {
  const KernelTable t = KernelTable::compute(JKClassifier(kEx1), table_size_for(kEx1, 20480));
  RelationSystem s = mine(kEx1, t);
  CHECK(s.verified_up_to >= 20480);
  const SeqId seqs[] = {SeqId::X, SeqId::Y, SeqId::Z};
  for (int k = 0; k < 3; ++k) {
    for (unsigned j = 0; j < 5; ++j) {
      const Polynomial listed = Polynomial::parse(kEx1Reference[k][j]);
      CHECK(first_failure(t, 5, seqs[k], j, listed, 10000) == 10000);
      // The miner prefers the fewest terms.
      CHECK(s.relation(seqs[k], j).rhs.terms().size() <= listed.terms().size());
      for (std::size_t n = 0; n < 10000; ++n) {
        REQUIRE(evaluate_rhs(listed, t, n) == evaluate_rhs(s.relation(seqs[k], j).rhs, t, n));
      }
    }
  }
  CHECK(s.initial_values[0] == std::array<std::uint8_t, 3>{0, 1, 0});
  CHECK(s.initial_values[1][0] == 1);
  CHECK(s.initial_values[1][1] == 0);
  CHECK(s.initial_values[2][0] == 0);
  CHECK(s.initial_values[2][1] == 1);
}

TEST_CASE("reference four-letter system holds once the Z residues are read as 1, 2, 3") {
  const KernelTable t = KernelTable::compute(JKClassifier(kEx2), table_size_for(kEx2, 10001));
  for (std::size_t s = 0; s < 6; ++s) {
    for (unsigned j = 0; j < 4; ++j) {
      CHECK(first_failure(t, 4, static_cast<SeqId>(s), j, Polynomial::parse(kEx2Reference[s][j]), 10000) == 10000);
    }
  }
  // Taken literally, the third line would claim a second formula for residue 1.
  const Polynomial literal = Polynomial::parse("W_{n+1} U_{n+1} + W_{n+1} V_{n+1}");
  CHECK(first_failure(t, 4, SeqId::Z, 1, literal, 10000) < 10000);
}

TEST_CASE("verification catches a corrupted relation") {
  RelationSystem s = mine(kEx2);
  s.relation(SeqId::V, 2).rhs = Polynomial::parse("Z_{n+1} Y_n");
  const auto v = verify(s, 20000);
  REQUIRE(v.has_value());
  CHECK(v->seq == SeqId::V);
  CHECK(v->residue == 2);
  CHECK(s.verified_up_to == v->n);
}

TEST_CASE("mining errors") {
  MiningOptions low;
  low.degree_max = 1;
  low.degree_cap = 1;
  low.check = {2048, 4096};
  // X_{4n+1} has no linear form for this pattern.
  const PatternVector needs_products({1, -1, 1, 1});
  CHECK_THROWS_AS(mine(needs_products, low), RelationNotFoundError);
  try {
    mine(needs_products, low);
  } catch (const RelationNotFoundError& e) {
    CHECK(e.stage() == Stage::mining);
    CHECK(e.sequence() == 'X');
    CHECK(e.residue() == 1);
  }
  CHECK_THROWS_AS(mine(kEx2, MiningOptions{0, 4}), ArgumentError);
  CHECK_THROWS_AS(mine(kEx2, MiningOptions{3, 5}), ArgumentError);

  MiningOptions tiny;
  tiny.fit = {0, 2};
  tiny.check = {2, 20480};
  CHECK_THROWS_AS(mine(kEx1, tiny), VerificationError);
}

TEST_CASE("property: mined systems verify out of sample on random patterns") {
  std::mt19937_64 rng(61);
  MiningOptions opts;
  opts.check = {2048, 8192};
  for (int trial = 0; trial < 8; ++trial) {
    const PatternVector p = testing::random_pattern(rng, 2, 6);
    RelationSystem s = mine(p, opts);
    CHECK_FALSE(verify(s, 8192).has_value());
    for (const auto& r : s.relations) CHECK(r.rhs.max_shift() <= 1);
  }
}

TEST_CASE("text rendering") {
  const RelationSystem s = mine(kEx1);
  const std::string text = to_text(s);
  CHECK(text.find("X_{5n+0} = X_n\n") != std::string::npos);
  CHECK(text.find("Z_{5n+3} = 0\n") != std::string::npos);
  CHECK(text.find("with the initial values:") != std::string::npos);
  CHECK(text.find("verified for n < 20480") != std::string::npos);
}

TEST_CASE("JSON round trip") {
  const RelationSystem s = mine(kEx2);
  const auto doc = to_json(s);
  CHECK(relation_system_from_json(doc) == s);
  CHECK(relation_system_from_json(nlohmann::json::parse(doc.dump())) == s);
  CHECK_THROWS_AS(relation_system_from_json(nlohmann::json{{"pattern", {1, -1}}}), ValidationError);
}
