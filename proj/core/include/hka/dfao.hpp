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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hka {

// Direction in which the base-d digits of n are fed to the automaton.
// lsd_first is the classical convention: the expansion is read right to left.
enum class Reading : std::uint8_t { lsd_first, msd_first };

const char* to_string(Reading reading) noexcept;

// Deterministic finite automaton with output over {0, 1}. States are
// 0..num_states()-1 and the transition function is total.
class Dfao {
 public:
  // transitions[q][digit]; throws ValidationError on a ragged or out-of-range table.
  Dfao(unsigned base, Reading reading, std::vector<std::vector<std::uint32_t>> transitions,
       std::vector<std::uint8_t> outputs, std::uint32_t initial = 0);

  unsigned base() const noexcept { return base_; }
  Reading reading() const noexcept { return reading_; }
  std::size_t num_states() const noexcept { return outputs_.size(); }
  std::uint32_t initial() const noexcept { return initial_; }
  std::uint32_t next(std::uint32_t state, unsigned digit) const { return delta_[state * base_ + digit]; }
  std::uint8_t output(std::uint32_t state) const { return outputs_[state]; }
  const std::vector<std::uint8_t>& outputs() const noexcept { return outputs_; }
  std::vector<std::vector<std::uint32_t>> table() const;

  // State reached on the base-d digits of n (no digits for n = 0), read in
  // this automaton's direction.
  std::uint32_t run(std::uint64_t n) const;
  std::uint8_t evaluate(std::uint64_t n) const { return outputs_[run(n)]; }

  friend bool operator==(const Dfao&, const Dfao&) = default;

 private:
  unsigned base_;
  Reading reading_;
  std::vector<std::uint32_t> delta_;
  std::vector<std::uint8_t> outputs_;
  std::uint32_t initial_;
};

// Reachable part renumbered breadth-first from the initial state, visiting
// digits 0..d-1 in order. The initial state becomes 0.
Dfao canonical_form(const Dfao& a);

// Output-respecting partition refinement on the reachable states, returned
// in canonical numbering.
Dfao minimize(const Dfao& a);

// True iff some bijection of states maps initial to initial and preserves
// transitions and outputs. Every state must be reachable from the initial
// state for a match to be found.
bool isomorphic(const Dfao& a, const Dfao& b);

// transition function=
//  [[0,1,2], ...]
// output function= [0, 1, 1]
std::string to_text(const Dfao& a);
std::string to_dot(const Dfao& a, const std::string& graph_name = "dfao");
nlohmann::json to_json(const Dfao& a);
Dfao dfao_from_json(const nlohmann::json& doc);

}  // namespace hka
