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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hka/dfao.hpp"
#include "hka/pattern.hpp"
#include "hka/pipeline.hpp"

namespace hka {

// Reference data for the patterns (1,1,-1,-1,1) and (1,1,-1,-1).
namespace reference {

inline const std::vector<int> kExample1Pattern{1, 1, -1, -1, 1};
inline const std::vector<int> kExample2Pattern{1, 1, -1, -1};

inline const std::vector<long long> kExample1Hankel{1, 1, -2, 0, 0, 16, -32, -128, 256, -1280, -6656, 0, 0, 0, 0};
inline const std::vector<long long> kExample2Hankel{1, 1, -2, 0, 0, 0, 0, 64, 128, 0, 0, 0, 0, 0, 0, 0};
inline const std::vector<std::uint8_t> kExample1Reduced{0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0};
inline const std::vector<std::uint8_t> kExample2Reduced{0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0};

inline const std::vector<std::vector<std::uint32_t>> kExample1Transitions{
    {0, 1, 2, 3, 4}, {1, 2, 3, 4, 1}, {2, 3, 3, 4, 2}, {3, 3, 3, 3, 3}, {4, 2, 3, 3, 4}};
inline const std::vector<std::uint8_t> kExample1Outputs{0, 1, 1, 0, 0};
inline const std::vector<std::vector<std::uint32_t>> kExample2Transitions{
    {1, 2, 2, 3}, {1, 4, 2, 4}, {2, 4, 3, 4}, {4, 2, 4, 3}, {4, 4, 4, 4}};
inline const std::vector<std::uint8_t> kExample2Outputs{0, 0, 1, 0, 0};

inline const std::vector<std::vector<std::uint32_t>> kExample1Morphism{
    {0, 1, 2, 3, 0}, {1, 2, 3, 0, 1}, {2, 3, 3, 3, 3}, {3, 3, 3, 3, 3}};
inline const std::vector<std::vector<std::uint32_t>> kExample2Morphism{
    {0, 1, 2, 3}, {3, 3, 0, 1}, {2, 3, 3, 3}, {3, 3, 3, 3}};
inline const std::vector<std::uint8_t> kMorphismCoding{0, 1, 1, 0};

// Relations for X, Y, Z of (1,1,-1,-1,1) by residue, products expanded.
inline const std::vector<std::vector<std::string>> kExample1Relations{
    {"X_n", "Z_{n+1} Y_n", "0", "0", "Z_{n+1} Y_{n+1}"},
    {"Y_n", "Z_{n+1} X_n Y_n + Z_{n+1} X_n", "Z_{n+1} Y_n", "Z_{n+1} Y_{n+1}",
     "Z_{n+1} X_{n+1} Y_{n+1} + Z_{n+1} X_{n+1}"},
    {"Z_n X_n + Z_n X_n Y_n + Z_n Y_n", "Z_{n+1} X_n + Z_{n+1} X_n Y_n + Z_{n+1} Y_n", "Z_{n+1} Y_n", "0",
     "Z_{n+1} Y_{n+1}"}};

}  // namespace reference

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Replaceable components, so that deliberately broken versions can be shown
// to make the corresponding criterion fail.
struct AcceptanceHooks {
  std::function<bool(const JKClassifier&, std::uint64_t)> in_J;
  std::function<Dfao(const Dfao&)> minimize;
  std::function<void(const std::string&)> progress;
};

class AcceptanceSuite {
 public:
  static constexpr int kCriteria = 11;

  explicit AcceptanceSuite(AcceptanceHooks hooks = {});

  // Criteria 1..10; criterion 11 only makes sense after the others.
  CriterionResult run(int id);
  // All eleven in order; criterion 11 times the whole run.
  std::vector<CriterionResult> run_all();

 private:
  const PipelineResult& example(int which);

  AcceptanceHooks hooks_;
  std::map<int, std::shared_ptr<const PipelineResult>> examples_;
};

// "PASS  3  name  detail  (1.23 s)"
std::string format_result(const CriterionResult& result);

}  // namespace hka
