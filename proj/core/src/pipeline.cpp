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

#include "hka/pipeline.hpp"

#include "hka/error.hpp"

namespace hka {

namespace {

struct Stages {
  KernelTable table;
  RelationSystem system;
  ClosedSystem closed;
  Dfao lsd_raw;
  Dfao msd_raw;
};

Stages build(const PatternVector& pattern, const PipelineOptions& options) {
  auto say = [&](const std::string& message) {
    if (options.progress) options.progress(message);
  };
  const std::size_t limit = std::max(options.mining.check.end, options.transition_check + 1);
  const std::size_t size = table_size_for(pattern, limit);
  say("oracle: " + std::to_string(size) + " terms");
  KernelTable table = KernelTable::compute(JKClassifier(pattern), size);

  say("mining relations");
  RelationSystem system = mine(pattern, table, options.mining);

  say("closing monomial basis");
  ClosedSystem closed = close_basis(system);
  say("basis dimension " + std::to_string(closed.basis.size()));
  if (auto bad = check_transitions(closed, table, options.transition_check)) {
    throw VerificationError("transition matrices disagree with the oracle at n = " + std::to_string(*bad), *bad);
  }
  Dfao lsd = lsd_dfao(closed.transitions, options.max_states);
  Dfao msd = msd_dfao(closed.transitions, options.max_states);
  say("automata: " + std::to_string(lsd.num_states()) + " lsd / " + std::to_string(msd.num_states()) +
      " msd states before minimization");
  return Stages{std::move(table), std::move(system), std::move(closed), std::move(lsd), std::move(msd)};
}

}  // namespace

PipelineResult run_pipeline(const PatternVector& pattern, const PipelineOptions& options) {
  Stages s = build(pattern, options);
  Dfao lsd = minimize(s.lsd_raw);
  Dfao msd = minimize(s.msd_raw);
  if (options.progress) {
    options.progress("minimized: " + std::to_string(lsd.num_states()) + " lsd / " + std::to_string(msd.num_states()) +
                     " msd states");
  }
  Substitution sub = extract_substitution(msd);
  return PipelineResult{std::move(s.table),
                        std::move(s.system),
                        std::move(s.closed),
                        std::move(s.lsd_raw),
                        std::move(s.msd_raw),
                        std::move(lsd),
                        std::move(msd),
                        std::move(sub)};
}

}  // namespace hka
