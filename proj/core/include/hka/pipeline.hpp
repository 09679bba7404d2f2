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
#include <functional>
#include <optional>
#include <string>

#include "hka/automaton.hpp"
#include "hka/dfao.hpp"
#include "hka/morphic.hpp"
#include "hka/oracle.hpp"
#include "hka/relation.hpp"

namespace hka {

struct PipelineOptions {
  MiningOptions mining;
  // Transition matrices are re-checked against the oracle for n < this bound.
  std::size_t transition_check = 4096;
  std::size_t max_states = std::size_t{1} << 16;
  std::function<void(const std::string&)> progress;
};

// Every artifact of one run, from oracle table to substitution.
struct PipelineResult {
  KernelTable table;
  RelationSystem system;
  ClosedSystem closed;
  Dfao lsd_raw;
  Dfao msd_raw;
  Dfao lsd;  // minimized
  Dfao msd;  // minimized
  Substitution substitution;
};

// oracle -> mine -> close -> lsd/msd automata -> minimize -> substitution.
PipelineResult run_pipeline(const PatternVector& pattern, const PipelineOptions& options = {});

}  // namespace hka
