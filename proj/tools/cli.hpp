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

#include <iosfwd>
#include <string>
#include <vector>

namespace hka::cli {

enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kValidation = 2,
  kMining = 3,
  kAutomaton = 4,
  kSubstitution = 5,
  kExponent = 6,
  kInternal = 70,
};

// Runs one invocation. args excludes the program name. Artifacts go to `out`
// (unless --out is given), progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hka::cli
