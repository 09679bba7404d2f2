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
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hka/pattern.hpp"

namespace hka {

using BigInt = boost::multiprecision::cpp_int;

// values[n] = H_n for n = 0, 1, ...; values[0] = 1.
struct HankelPrefix {
  std::vector<BigInt> values;
};

// Determinant of the n x n matrix (c_{i+j}) by fraction-free (Bareiss)
// elimination. Needs c_0, ..., c_{2n-2}; H_0 = 1.
BigInt hankel_exact(std::span<const BigInt> seq, std::size_t n);
BigInt hankel_exact(std::span<const Sign> seq, std::size_t n);

// (H_m(f) / 2^{m-1}) mod 2, computed as the GF(2) determinant of the matrix
// whose first m-1 columns are (delta_{i+j}) and whose last column is all ones.
// Returns 0 for m = 0 so that the value lines up with Z_0.
std::uint8_t reduced_hankel_bit(const PatternVector& pattern, std::size_t m);

HankelPrefix hankel_prefix_exact(const PatternVector& pattern, std::size_t count);
std::vector<std::uint8_t> hankel_prefix_mod2(const PatternVector& pattern, std::size_t count);

}  // namespace hka
