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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hka/oracle.hpp"
#include "hka/pattern.hpp"
#include "hka/polynomial.hpp"

namespace hka {

// Half-open range [begin, end) of the recurrence variable n.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const noexcept { return end > begin ? end - begin : 0; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// S_{dn+residue} = rhs(n), where rhs only mentions S_n and S_{n+1}.
struct Relation {
  SeqId target = SeqId::X;
  unsigned residue = 0;
  Polynomial rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct RelationSystem {
  PatternVector pattern;
  // relations[seq * d + residue]
  std::vector<Relation> relations;
  // initial_values[seq][k] = S(k), k = 0, 1, 2
  std::array<std::array<std::uint8_t, 3>, kSequenceCount> initial_values{};
  // Every relation holds for all n < verified_up_to (empirically).
  std::size_t verified_up_to = 0;
  unsigned degree_max = 0;
  IndexRange fit_range;
  IndexRange check_range;

  unsigned base() const noexcept { return pattern.base(); }
  const Relation& relation(SeqId seq, unsigned residue) const;
  Relation& relation(SeqId seq, unsigned residue);
  // Value of generator g at n = 0, i.e. S(shift).
  std::uint8_t initial(Generator g) const { return initial_values[static_cast<std::size_t>(g.seq)][g.shift]; }

  friend bool operator==(const RelationSystem&, const RelationSystem&) = default;
};

struct MiningOptions {
  unsigned degree_max = 3;
  unsigned degree_cap = 4;
  IndexRange fit{0, 2048};
  IndexRange check{2048, 20480};
};

// Oracle table large enough to fit and check relations for n < limit.
std::size_t table_size_for(const PatternVector& pattern, std::size_t limit);

// Guess-and-verify: for every (S, j) solve for the GF(2) coefficients of all
// squarefree monomials of degree <= degree_max in {S_n, S_{n+1}} on the fit
// range, preferring the fewest terms (ties: canonical monomial order), then
// check out of sample. Escalates the degree up to degree_cap when the target
// is outside the span.
RelationSystem mine(const PatternVector& pattern, const MiningOptions& options = {});
RelationSystem mine(const PatternVector& pattern, const KernelTable& table, const MiningOptions& options = {});

struct Violation {
  std::size_t n = 0;
  SeqId seq = SeqId::X;
  unsigned residue = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Right-hand side of a relation evaluated at n from oracle values.
std::uint8_t evaluate_rhs(const Polynomial& rhs, const KernelTable& table, std::size_t n);

// Checks every relation for n < limit against the table. On success raises
// verified_up_to to at least `limit`; on failure sets it to the violating n.
std::optional<Violation> verify(RelationSystem& system, const KernelTable& table, std::size_t limit);
std::optional<Violation> verify(RelationSystem& system, std::size_t limit);

// "Z_{5n+2} = Z_{n+1} Y_n" lines grouped by sequence, then initial values.
std::string to_text(const RelationSystem& system);

nlohmann::json to_json(const RelationSystem& system);
RelationSystem relation_system_from_json(const nlohmann::json& doc);

}  // namespace hka
