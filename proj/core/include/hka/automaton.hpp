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
#include <unordered_map>
#include <vector>

#include "hka/dfao.hpp"
#include "hka/gf2.hpp"
#include "hka/oracle.hpp"
#include "hka/polynomial.hpp"
#include "hka/relation.hpp"

namespace hka {

// Monomials over {S, sigma S, sigma^2 S} closed under every Lambda_j.
struct MonomialBasis {
  std::vector<Monomial> monomials;
  std::size_t constant_index = 0;
  std::size_t z_index = 1;

  std::size_t size() const noexcept { return monomials.size(); }
  std::optional<std::size_t> index_of(Monomial m) const;
};

// A(d n + j) = M_j A(n) for the vector A(n) of basis monomials evaluated at n.
struct TransitionMatrices {
  unsigned base = 2;
  std::size_t dimension = 0;
  std::vector<gf2::Matrix> matrices;  // matrices[j] has `dimension` rows
  gf2::BitVector initial;             // A(0)
  std::size_t z_index = 0;
};

struct ClosedSystem {
  MonomialBasis basis;
  TransitionMatrices transitions;
};

// Lambda_j applied to a single generator, rewritten through the relations
// and the shift rules Lambda_j sigma^s u = Lambda_{j+s} u (j + s < d) and
// sigma Lambda_{j+s-d} u otherwise.
Polynomial rewrite_generator(const RelationSystem& system, unsigned residue, Generator g);

// Worklist closure seeded with [1, Z]: each monomial is mapped through
// Lambda_j as the product of its rewritten generators, and unseen monomials
// are appended until a fixpoint. Throws ResourceError past `max_dimension`.
ClosedSystem close_basis(const RelationSystem& system, std::size_t max_dimension = std::size_t{1} << 16);

// A(n) evaluated monomial by monomial from oracle values.
gf2::BitVector evaluate_basis(const MonomialBasis& basis, const KernelTable& table, std::size_t n);

// First n < limit where some M_j A(n) != A(d n + j), if any.
std::optional<std::size_t> check_transitions(const ClosedSystem& closed, const KernelTable& table, std::size_t limit);

// Row-vector automaton: states are e_Z M_{w_1} ... M_{w_k}, output r . A(0).
Dfao lsd_dfao(const TransitionMatrices& tm, std::size_t max_states = std::size_t{1} << 16);

// Column-vector automaton: states are M_{w_k} ... M_{w_1} A(0), output its Z entry.
Dfao msd_dfao(const TransitionMatrices& tm, std::size_t max_states = std::size_t{1} << 16);

// Number of distinct matrix products M_{w_1} ... M_{w_k} (including the
// identity); the unprojected closure, useful only for diagnostics.
std::size_t matrix_product_closure_size(const TransitionMatrices& tm, std::size_t max_products = std::size_t{1} << 14);

}  // namespace hka
