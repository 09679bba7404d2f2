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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hka/dfao.hpp"
#include "hka/pattern.hpp"

namespace hka {

// d-uniform substitution with a 0/1 coding; the coded fixed point starting
// from `start` is the sequence it generates.
struct Substitution {
  unsigned base = 2;
  std::vector<std::vector<std::uint32_t>> images;
  std::vector<std::uint8_t> coding;
  std::uint32_t start = 0;

  std::size_t alphabet_size() const noexcept { return images.size(); }
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

// Letters are the states of an msd-first DFAO and image(q) lists
// transition(q, 0), ..., transition(q, d-1). Throws StructuralError if the
// automaton is lsd-first or digit 0 does not fix the initial state.
Substitution extract_substitution(const Dfao& msd_automaton);

// First `count` coded letters of the fixed point, expanded level by level.
std::vector<std::uint8_t> expand_fixed_point(const Substitution& s, std::size_t count);

std::vector<std::uint64_t> ones_positions(std::span<const std::uint8_t> prefix);

// max a_{i+1}/a_i over the positions a_i >= threshold.
struct ScaleMaximum {
  std::uint64_t threshold = 0;
  double max_ratio = 0;
  std::size_t samples = 0;
};

struct RhoEstimate {
  double rho = 0;
  // Change between the tail maxima of the two largest scales d^k; a
  // convergence indicator rather than a confidence bound.
  double uncertainty = 0;
  std::size_t samples = 0;
  std::uint64_t max_position = 0;
  std::vector<ScaleMaximum> scales;  // thresholds d^1, d^2, ...
};

// Empirical limsup of a_{i+1}/a_i: the maximum ratio over all i with
// a_i >= cutoff_fraction * (largest position). Throws InapplicableError when
// fewer than 32 ratios survive the cutoff.
RhoEstimate estimate_rho(std::span<const std::uint64_t> positions, unsigned base, double cutoff_fraction = 0.1);

// (1 + rho) min(rho^2, d); exactly 2 at rho = 1.
double mu_hankel(double rho, unsigned d);

struct AcParameters {
  unsigned kernel_size_m = 0;
  unsigned internal_alphabet_c = 0;
};

// Size of the d-kernel of f and of the internal alphabet of its sign
// substitution (+ -> v, - -> -v), both by explicit closure with sequences
// identified by their first terms. Throws DegenerateSequenceError for the
// constant pattern.
AcParameters ac_parameters(const PatternVector& pattern);

// c d (d^m + 1); throws ArgumentError on overflow.
std::uint64_t mu_adamczewski(unsigned c, unsigned d, unsigned m);

struct ExponentReport {
  unsigned base = 2;
  std::optional<double> rho_estimate;
  double rho_uncertainty = 0;
  std::optional<double> assumed_rho;
  double rho_used = 0;
  std::size_t prefix_len = 0;
  std::size_t ones_count = 0;
  double mu_hankel = 0;
  double mu_hankel_low = 0;
  double mu_hankel_high = 0;
  unsigned kernel_size_m = 0;
  unsigned internal_alphabet_c = 0;
  std::uint64_t mu_adamczewski = 0;
  std::vector<ScaleMaximum> scales;
  std::vector<std::string> notes;

  friend bool operator==(const ExponentReport&, const ExponentReport&) = default;
};

inline bool operator==(const ScaleMaximum& a, const ScaleMaximum& b) {
  return a.threshold == b.threshold && a.max_ratio == b.max_ratio && a.samples == b.samples;
}

// Expands d^prefix_exponent terms of the coded fixed point, estimates rho
// (or takes assume_rho) and evaluates both bounds.
ExponentReport exponent_report(const PatternVector& pattern, const Substitution& reduced_hankel_mod2,
                               unsigned prefix_exponent, std::optional<double> assume_rho = std::nullopt);

// morphism= [[...], ...]
// coding= [...]
std::string to_text(const Substitution& s);
nlohmann::json to_json(const Substitution& s);
Substitution substitution_from_json(const nlohmann::json& doc);

std::string to_text(const ExponentReport& report);
nlohmann::json to_json(const ExponentReport& report);
ExponentReport exponent_report_from_json(const nlohmann::json& doc);

}  // namespace hka
