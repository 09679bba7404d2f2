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

#include "hka/automaton.hpp"

#include <unordered_set>

#include "hka/error.hpp"

namespace hka {

std::optional<std::size_t> MonomialBasis::index_of(Monomial m) const {
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (monomials[i] == m) return i;
  }
  return std::nullopt;
}

Polynomial rewrite_generator(const RelationSystem& system, unsigned residue, Generator g) {
  const unsigned d = system.base();
  const unsigned j = residue + g.shift;
  if (j < d) return system.relation(g.seq, j).rhs;
  return system.relation(g.seq, j - d).rhs.shifted();
}

ClosedSystem close_basis(const RelationSystem& system, std::size_t max_dimension) {
  const unsigned d = system.base();
  for (const Relation& rel : system.relations) {
    if (rel.rhs.max_shift() > 1) {
      throw StructuralError(Stage::automaton, "relation right-hand side uses a shift beyond S_{n+1}");
    }
  }
  std::vector<std::vector<Polynomial>> rewritten(d, std::vector<Polynomial>(kAutomatonGenerators));
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned g = 0; g < kAutomatonGenerators; ++g) rewritten[j][g] = rewrite_generator(system, j, Generator::from_index(g));
  }

  ClosedSystem closed;
  MonomialBasis& basis = closed.basis;
  std::unordered_map<std::uint32_t, std::size_t> index;
  auto add = [&](Monomial m) {
    auto [it, inserted] = index.emplace(m.mask(), basis.monomials.size());
    if (inserted) {
      basis.monomials.push_back(m);
      if (basis.monomials.size() > max_dimension) {
        throw ResourceError("monomial basis exceeds " + std::to_string(max_dimension) + " elements");
      }
    }
    return it->second;
  };
  basis.constant_index = add(Monomial());
  basis.z_index = add(Monomial::of(Generator{SeqId::Z, 0}));

  std::vector<std::vector<Polynomial>> images(d);
  for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
    const Monomial m = basis.monomials[i];
    for (unsigned j = 0; j < d; ++j) {
      Polynomial image = Polynomial::one();
      for (const Generator& g : m.generators()) {
        image = image * rewritten[j][g.index()];
        if (image.is_zero()) break;
      }
      for (Monomial t : image.terms()) add(t);
      images[j].push_back(std::move(image));
    }
  }

  const std::size_t dim = basis.monomials.size();
  TransitionMatrices& tm = closed.transitions;
  tm.base = d;
  tm.dimension = dim;
  tm.z_index = basis.z_index;
  tm.matrices.assign(d, gf2::Matrix(dim, gf2::BitVector(dim)));
  for (unsigned j = 0; j < d; ++j) {
    for (std::size_t row = 0; row < dim; ++row) {
      for (Monomial t : images[j][row].terms()) tm.matrices[j][row].set(index.at(t.mask()));
    }
  }
  tm.initial = gf2::BitVector(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::uint8_t value = 1;
    for (const Generator& g : basis.monomials[i].generators()) value &= system.initial(g);
    tm.initial.set(i, value != 0);
  }
  if (gf2::multiply(tm.matrices[0], tm.initial) != tm.initial) {
    throw StructuralError(Stage::automaton, "M_0 A(0) != A(0): relations disagree with the initial values at n = 0");
  }
  return closed;
}

gf2::BitVector evaluate_basis(const MonomialBasis& basis, const KernelTable& table, std::size_t n) {
  gf2::BitVector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::uint8_t value = 1;
    for (const Generator& g : basis.monomials[i].generators()) value &= table.value(g.seq, n + g.shift);
    out.set(i, value != 0);
  }
  return out;
}

std::optional<std::size_t> check_transitions(const ClosedSystem& closed, const KernelTable& table, std::size_t limit) {
  const unsigned d = closed.transitions.base;
  for (std::size_t n = 0; n < limit; ++n) {
    const gf2::BitVector a = evaluate_basis(closed.basis, table, n);
    for (unsigned j = 0; j < d; ++j) {
      if (gf2::multiply(closed.transitions.matrices[j], a) != evaluate_basis(closed.basis, table, d * n + j)) return n;
    }
  }
  return std::nullopt;
}

namespace {

template <typename Step, typename Output>
Dfao explore(const TransitionMatrices& tm, gf2::BitVector start, Reading reading, std::size_t max_states, Step step,
             Output output) {
  const unsigned d = tm.base;
  std::unordered_map<gf2::BitVector, std::uint32_t, gf2::BitVectorHash> ids;
  std::vector<gf2::BitVector> states;
  std::vector<std::vector<std::uint32_t>> table;
  ids.emplace(start, 0);
  states.push_back(std::move(start));
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<std::uint32_t> row(d);
    for (unsigned j = 0; j < d; ++j) {
      gf2::BitVector next = step(states[i], j);
      auto [it, inserted] = ids.emplace(next, static_cast<std::uint32_t>(states.size()));
      if (inserted) {
        if (states.size() >= max_states) {
          throw ResourceError("automaton exceeds " + std::to_string(max_states) + " states");
        }
        states.push_back(std::move(next));
      }
      row[j] = it->second;
    }
    table.push_back(std::move(row));
  }
  std::vector<std::uint8_t> outputs(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) outputs[i] = output(states[i]) ? 1 : 0;
  return Dfao(d, reading, std::move(table), std::move(outputs), 0);
}

}  // namespace

Dfao lsd_dfao(const TransitionMatrices& tm, std::size_t max_states) {
  gf2::BitVector unit(tm.dimension);
  unit.set(tm.z_index);
  return explore(
      tm, std::move(unit), Reading::lsd_first, max_states,
      [&](const gf2::BitVector& row, unsigned j) { return gf2::multiply(row, tm.matrices[j]); },
      [&](const gf2::BitVector& row) { return row.dot(tm.initial); });
}

Dfao msd_dfao(const TransitionMatrices& tm, std::size_t max_states) {
  return explore(
      tm, tm.initial, Reading::msd_first, max_states,
      [&](const gf2::BitVector& column, unsigned j) { return gf2::multiply(tm.matrices[j], column); },
      [&](const gf2::BitVector& column) { return column.get(tm.z_index); });
}

std::size_t matrix_product_closure_size(const TransitionMatrices& tm, std::size_t max_products) {
  struct MatrixHash {
    std::size_t operator()(const gf2::Matrix& m) const noexcept {
      std::size_t h = 0;
      for (const auto& row : m) h = h * 1000003u ^ row.hash();
      return h;
    }
  };
  gf2::Matrix identity(tm.dimension, gf2::BitVector(tm.dimension));
  for (std::size_t i = 0; i < tm.dimension; ++i) identity[i].set(i);
  std::unordered_set<gf2::Matrix, MatrixHash> seen{identity};
  std::vector<gf2::Matrix> frontier{identity};
  while (!frontier.empty()) {
    std::vector<gf2::Matrix> next;
    for (const auto& p : frontier) {
      for (const auto& m : tm.matrices) {
        gf2::Matrix product(tm.dimension);
        for (std::size_t r = 0; r < tm.dimension; ++r) product[r] = gf2::multiply(p[r], m);
        if (seen.insert(product).second) {
          if (seen.size() > max_products) {
            throw ResourceError("matrix product closure exceeds " + std::to_string(max_products));
          }
          next.push_back(std::move(product));
        }
      }
    }
    frontier.swap(next);
  }
  return seen.size();
}

}  // namespace hka
