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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace hka;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hankel command prints the table rows") {
  const Outcome o = run({"--pattern", "1,1,-1,-1,1", "hankel", "--count", "15"});
  CHECK(o.code == 0);
  CHECK(o.out ==
        "n    0  1   2  3  4   5    6     7    8      9     10  11  12  13  14\n"
        "H_n  1  1  -2  0  0  16  -32  -128  256  -1280  -6656   0   0   0   0\n"
        "u_n  0  1   1  0  0   1    1     0    0      1      1   0   0   0   0\n");

  const Outcome j = run({"--pattern", "1,1,-1,-1", "hankel", "--count", "16", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["H"][7] == "64");
  CHECK(doc["H"][8] == "128");
  CHECK(doc["u"] == std::vector<int>{0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("validation failures exit with code 2") {
  CHECK(run({"--pattern", "1", "hankel"}).code == 2);
  CHECK(run({"--pattern", "-1,1", "mine"}).code == 2);
  CHECK(run({"--pattern", "1,3", "hankel"}).code == 2);
  CHECK(run({"hankel"}).code == 2);
  CHECK(run({"--pattern", "1,-1"}).code == 2);
  CHECK(run({"--pattern", "1,-1", "hankel", "--count", "0"}).code == 2);
  CHECK(run({"--pattern", "1,-1", "hankel", "--format", "dot"}).code == 2);
  CHECK(run({"--pattern", "1,-1", "frobnicate"}).code == 2);

  const Outcome o = run({"--pattern", "1", "hankel", "--error-json"});
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["error"]["stage"] == "validation");
  CHECK(doc["error"]["exit_code"] == 2);
}

TEST_CASE("stage failures have their own exit codes") {
  CHECK(run({"--pattern", "1,1,1", "exponent", "-q"}).code == 6);
  CHECK(run({"--pattern", "1,1,-1,-1", "mine", "--degree-max", "1", "-q"}).code == 0);
  CHECK(run({"--pattern", "1,1,-1,-1,1", "mine", "--fit-end", "2", "-q"}).code == 3);
}

TEST_CASE("report reproduces the reference layout and is deterministic") {
  const Outcome a = run({"--pattern", "1,1,-1,-1,1", "report", "-q"});
  const Outcome b = run({"--pattern", "1,1,-1,-1,1", "report", "-q"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind(
            "v= [1, 1, -1, -1, 1]\n"
            "d= 5\n"
            "Automaton:\n"
            "transition function=\n"
            " [[0,1,2,3,4], [1,2,3,4,1], [2,3,3,4,2], [3,3,3,3,3], [4,2,3,3,4]]\n"
            "output function= [0, 1, 1, 0, 0]\n"
            "\n"
            "Substitution:\n"
            "morphism= [[0,1,2,3,0], [1,2,3,0,1], [2,3,3,3,3], [3,3,3,3,3]]\n"
            "coding= [0, 1, 1, 0]\n",
            0) == 0);
  CHECK(a.out.find("automatic bound") != std::string::npos);
  CHECK(a.err.empty());

  const Outcome c = run({"--pattern", "1,1,-1,-1", "report"});
  CHECK(c.out.find("[[1,2,2,3], [1,4,2,4], [2,4,3,4], [4,2,4,3], [4,4,4,4]]") != std::string::npos);
  CHECK(c.out.find("morphism= [[0,1,2,3], [3,3,0,1], [2,3,3,3], [3,3,3,3]]") != std::string::npos);
  CHECK_FALSE(c.err.empty());  // progress lines

  const Outcome j = run({"--pattern", "1,1,-1,-1", "report", "--format", "json", "-q"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["d"] == 4);
  CHECK(doc["automaton"]["outputs"] == std::vector<int>{0, 0, 1, 0, 0});
  CHECK(doc["exponent"]["mu_adamczewski"] == 136);
}

TEST_CASE("report of a constant pattern keeps everything but the exponent section") {
  const Outcome o = run({"--pattern", "1,1,1", "report", "-q", "--format", "json"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["exponent"].contains("error"));
}

TEST_CASE("dot output and --out") {
  const Outcome o = run({"--pattern", "1,1,-1,-1,1", "automaton", "--format", "dot", "-q"});
  CHECK(o.code == 0);
  CHECK(o.out.find("label=\"e/0\"") != std::string::npos);

  const std::string path = "hka_cli_test_out.json";
  const Outcome f = run({"--pattern", "1,-1", "substitution", "--format", "json", "--out", path, "-q"});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["d"] == 2);
  std::remove(path.c_str());
}

TEST_CASE("exponent with an asserted rho") {
  const Outcome o = run({"--pattern", "1,-1", "exponent", "--assume-rho", "1", "--format", "json", "-q"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["mu_hankel"] == 2.0);
  CHECK(doc["mu_adamczewski"] == 20);
  CHECK(run({"--pattern", "1,-1", "exponent", "--assume-rho", "0.5", "-q"}).code == 2);
}

TEST_CASE("msd automaton on request") {
  const Outcome o = run({"--pattern", "1,1,-1,-1", "automaton", "--reading", "msd", "--format", "json", "-q"});
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["reading"] == "msd-first");
}
