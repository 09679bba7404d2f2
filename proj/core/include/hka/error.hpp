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
#include <stdexcept>
#include <string>

namespace hka {

// Every failure raised by the library derives from Error. The stage tag is
// what the command-line tool maps onto exit codes.
enum class Stage { validation, argument, mining, automaton, substitution, exponent, internal };

const char* to_string(Stage stage) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Stage stage, const std::string& what) : std::runtime_error(what), stage_(stage) {}
  Stage stage() const noexcept { return stage_; }

 private:
  Stage stage_;
};

// Malformed pattern vectors and other user-facing input.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(Stage::validation, what) {}
};

// Precondition violations on otherwise valid objects (too short prefix, l > m, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(Stage::argument, what) {}
};

class RelationNotFoundError : public Error {
 public:
  RelationNotFoundError(const std::string& what, char sequence, unsigned residue)
      : Error(Stage::mining, what), sequence_(sequence), residue_(residue) {}
  char sequence() const noexcept { return sequence_; }
  unsigned residue() const noexcept { return residue_; }

 private:
  char sequence_;
  unsigned residue_;
};

class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::size_t index)
      : Error(Stage::mining, what), index_(index) {}
  // First n at which a mined relation disagreed with the oracle.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// State or basis closure exceeded its configured cap.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(Stage::automaton, what) {}
};

class StructuralError : public Error {
 public:
  StructuralError(Stage stage, const std::string& what) : Error(stage, what) {}
};

// Constant patterns: f has no sign changes and the exponent bounds degenerate.
class DegenerateSequenceError : public Error {
 public:
  explicit DegenerateSequenceError(const std::string& what) : Error(Stage::exponent, what) {}
};

// Too few nonzero reduced Hankel determinants for the limsup estimate.
class InapplicableError : public Error {
 public:
  explicit InapplicableError(const std::string& what) : Error(Stage::exponent, what) {}
};

}  // namespace hka
