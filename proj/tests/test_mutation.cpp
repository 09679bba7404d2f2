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

#include "hka/acceptance.hpp"

using namespace hka;

TEST_CASE("a sabotaged J classifier fails the J/K rule criterion") {
  AcceptanceHooks hooks;
  // Ignores the parity of the trailing-zero count.
  hooks.in_J = [](const JKClassifier& c, std::uint64_t t) {
    const unsigned d = c.pattern().base();
    std::uint64_t m = t + 1;
    while (m % d == 0) m /= d;
    return c.in_P(static_cast<unsigned>(m % d));
  };
  AcceptanceSuite suite(hooks);
  const CriterionResult r = suite.run(5);
  CHECK_FALSE(r.passed);
  CHECK(AcceptanceSuite().run(5).passed);
}

TEST_CASE("a sabotaged minimizer fails the automaton criterion") {
  AcceptanceHooks hooks;
  hooks.minimize = [](const Dfao& a) { return canonical_form(a); };
  AcceptanceSuite suite(hooks);
  CHECK_FALSE(suite.run(7).passed);

  AcceptanceHooks merge_all;
  merge_all.minimize = [](const Dfao& a) {
    return Dfao(a.base(), a.reading(), {std::vector<std::uint32_t>(a.base(), 0)}, {0}, 0);
  };
  CHECK_FALSE(AcceptanceSuite(merge_all).run(7).passed);
}

TEST_CASE("criterion ids") {
  AcceptanceSuite suite;
  CHECK_THROWS(suite.run(0));
  CHECK_THROWS(suite.run(11));
  const CriterionResult r = suite.run(2);
  CHECK(r.id == 2);
  CHECK(format_result(r).rfind("PASS  2", 0) == 0);
}
