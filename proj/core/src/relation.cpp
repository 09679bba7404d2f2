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

#include "hka/relation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "hka/error.hpp"
#include "hka/gf2.hpp"

namespace hka {

const Relation& RelationSystem::relation(SeqId seq, unsigned residue) const {
  return relations.at(static_cast<std::size_t>(seq) * base() + residue);
}

Relation& RelationSystem::relation(SeqId seq, unsigned residue) {
  return relations.at(static_cast<std::size_t>(seq) * base() + residue);
}

std::size_t table_size_for(const PatternVector& pattern, std::size_t limit) {
  return std::max<std::size_t>(pattern.base() * limit + 1, 3);
}

namespace {

// All squarefree monomials of degree <= max_degree over the 12 relation
// generators, in canonical order.
std::vector<Monomial> monomial_basis(unsigned max_degree) {
  std::vector<Monomial> out{Monomial()};
  std::vector<unsigned> combo;
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    combo.resize(deg);
    for (unsigned i = 0; i < deg; ++i) combo[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (unsigned g : combo) mask |= std::uint32_t{1} << g;
      out.push_back(Monomial(mask));
      int pos = static_cast<int>(deg) - 1;
      while (pos >= 0 && combo[pos] == kRelationGenerators - deg + static_cast<unsigned>(pos)) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (unsigned i = static_cast<unsigned>(pos) + 1; i < deg; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  return out;
}

// Solves target = sum of columns with the fewest columns, over a set of
// distinct nonzero columns listed in canonical monomial order.
class SparseSolver {
 public:
  explicit SparseSolver(std::vector<gf2::BitVector> columns) : columns_(std::move(columns)) {
    for (std::size_t i = 0; i < columns_.size(); ++i) index_.emplace(columns_[i], i);
    for (std::size_t i = 0; i < columns_.size(); ++i) insert_pivot(i);
  }

  // Column positions of the chosen solution, or nullopt when target is not in
  // the span.
  std::optional<std::vector<std::size_t>> solve(const gf2::BitVector& target) {
    auto combo = reduce(target);
    if (!combo) return std::nullopt;
    if (target.none()) return std::vector<std::size_t>{};
    for (unsigned weight = 1; weight <= 4; ++weight) {
      if (auto found = search(target, weight)) return found;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = combo->find_next(0); i < combo->size(); i = combo->find_next(i + 1)) out.push_back(i);
    return out;
  }

 private:
  struct Pivot {
    gf2::BitVector vec;
    gf2::BitVector combo;
    std::size_t bit;
  };

  void insert_pivot(std::size_t column) {
    gf2::BitVector vec = columns_[column];
    gf2::BitVector combo(columns_.size());
    combo.set(column);
    for (const Pivot& p : pivots_) {
      if (vec.get(p.bit)) {
        vec ^= p.vec;
        combo ^= p.combo;
      }
    }
    const std::size_t bit = vec.find_next(0);
    if (bit < vec.size()) pivots_.push_back(Pivot{std::move(vec), std::move(combo), bit});
  }

  std::optional<gf2::BitVector> reduce(gf2::BitVector vec) const {
    gf2::BitVector combo(columns_.size());
    for (const Pivot& p : pivots_) {
      if (vec.get(p.bit)) {
        vec ^= p.vec;
        combo ^= p.combo;
      }
    }
    if (!vec.none()) return std::nullopt;
    return combo;
  }

  std::optional<std::size_t> lookup(const gf2::BitVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Lexicographically first solution with exactly `weight` columns.
  std::optional<std::vector<std::size_t>> search(const gf2::BitVector& target, unsigned weight) {
    const std::size_t n = columns_.size();
    if (weight == 1) {
      if (auto k = lookup(target)) return std::vector<std::size_t>{*k};
      return std::nullopt;
    }
    if (weight == 2) {
      for (std::size_t i = 0; i < n; ++i) {
        gf2::BitVector rest = target;
        rest ^= columns_[i];
        if (auto j = lookup(rest); j && *j > i) return std::vector<std::size_t>{i, *j};
      }
      return std::nullopt;
    }
    if (weight == 3) {
      for (std::size_t i = 0; i < n; ++i) {
        gf2::BitVector ti = target;
        ti ^= columns_[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          gf2::BitVector rest = ti;
          rest ^= columns_[j];
          if (auto k = lookup(rest); k && *k > j) return std::vector<std::size_t>{i, j, *k};
        }
      }
      return std::nullopt;
    }
    build_pairs();
    for (std::size_t i = 0; i < n; ++i) {
      gf2::BitVector ti = target;
      ti ^= columns_[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        gf2::BitVector rest = ti;
        rest ^= columns_[j];
        auto it = pairs_.find(rest.hash());
        if (it == pairs_.end()) continue;
        std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
        for (auto [k, l] : it->second) {
          if (k <= j) continue;
          if (best && std::pair(k, l) >= *best) continue;
          gf2::BitVector check = columns_[k];
          check ^= columns_[l];
          if (check == rest) best = std::pair(k, l);
        }
        if (best) return std::vector<std::size_t>{i, j, best->first, best->second};
      }
    }
    return std::nullopt;
  }

  void build_pairs() {
    if (pairs_built_) return;
    pairs_built_ = true;
    for (std::uint32_t k = 0; k < columns_.size(); ++k) {
      for (std::uint32_t l = k + 1; l < columns_.size(); ++l) {
        gf2::BitVector sum = columns_[k];
        sum ^= columns_[l];
        pairs_[sum.hash()].emplace_back(k, l);
      }
    }
  }

  std::vector<gf2::BitVector> columns_;
  std::unordered_map<gf2::BitVector, std::size_t, gf2::BitVectorHash> index_;
  std::vector<Pivot> pivots_;
  bool pairs_built_ = false;
  std::unordered_map<std::size_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs_;
};

std::string target_name(SeqId seq, unsigned d, unsigned residue) {
  return std::string(1, sequence_name(seq)) + "_{" + std::to_string(d) + "n+" + std::to_string(residue) + "}";
}

// Generator values over the fit samples plus the monomial columns built from them.
struct FitData {
  std::vector<Monomial> monomials;       // distinct nonzero columns, canonical order
  std::vector<gf2::BitVector> columns;
};

FitData build_fit_data(const KernelTable& table, IndexRange fit, unsigned degree) {
  const std::size_t samples = fit.size();
  std::array<gf2::BitVector, kRelationGenerators> gens;
  for (unsigned g = 0; g < kRelationGenerators; ++g) {
    const Generator gen = Generator::from_index(g);
    gens[g] = gf2::BitVector(samples);
    for (std::size_t s = 0; s < samples; ++s) {
      gens[g].set(s, table.value(gen.seq, fit.begin + s + gen.shift) != 0);
    }
  }
  FitData data;
  std::unordered_map<gf2::BitVector, std::size_t, gf2::BitVectorHash> seen;
  for (Monomial m : monomial_basis(degree)) {
    gf2::BitVector col(samples);
    col.fill(true);
    for (std::uint32_t mask = m.mask(); mask; mask &= mask - 1) {
      col &= gens[static_cast<unsigned>(std::countr_zero(mask))];
    }
    if (col.none() || seen.contains(col)) continue;
    seen.emplace(col, data.columns.size());
    data.monomials.push_back(m);
    data.columns.push_back(std::move(col));
  }
  return data;
}

}  // namespace

std::uint8_t evaluate_rhs(const Polynomial& rhs, const KernelTable& table, std::size_t n) {
  return rhs.evaluate([&](Generator g) { return table.value(g.seq, n + g.shift); });
}

RelationSystem mine(const PatternVector& pattern, const MiningOptions& options) {
  const std::size_t limit = std::max(options.fit.end, options.check.end);
  const KernelTable table = KernelTable::compute(JKClassifier(pattern), table_size_for(pattern, limit));
  return mine(pattern, table, options);
}

RelationSystem mine(const PatternVector& pattern, const KernelTable& table, const MiningOptions& options) {
  const unsigned d = pattern.base();
  if (options.fit.size() == 0) throw ArgumentError("empty fit range");
  if (options.degree_max < 1 || options.degree_cap < options.degree_max || options.degree_cap > 4) {
    throw ArgumentError("need 1 <= degree_max <= degree_cap <= 4");
  }
  const std::size_t limit = std::max(options.fit.end, options.check.end);
  if (table.size() < table_size_for(pattern, limit)) throw ArgumentError("oracle table too small for the ranges");

  RelationSystem system{pattern, {}, {}, 0, options.degree_max, options.fit, options.check};
  for (SeqId seq : kAllSequences) {
    for (unsigned k = 0; k < 3; ++k) system.initial_values[static_cast<std::size_t>(seq)][k] = table.value(seq, k);
  }
  system.relations.resize(kSequenceCount * d);

  std::vector<std::optional<FitData>> fits(options.degree_cap + 1);
  std::vector<std::optional<SparseSolver>> solvers(options.degree_cap + 1);

  for (SeqId seq : kAllSequences) {
    for (unsigned j = 0; j < d; ++j) {
      gf2::BitVector target(options.fit.size());
      for (std::size_t s = 0; s < options.fit.size(); ++s) {
        target.set(s, table.value(seq, d * (options.fit.begin + s) + j) != 0);
      }
      std::optional<Polynomial> rhs;
      for (unsigned degree = options.degree_max; degree <= options.degree_cap && !rhs; ++degree) {
        if (!fits[degree]) {
          fits[degree] = build_fit_data(table, options.fit, degree);
          solvers[degree].emplace(fits[degree]->columns);
        }
        if (auto positions = solvers[degree]->solve(target)) {
          std::vector<Monomial> terms;
          for (std::size_t p : *positions) terms.push_back(fits[degree]->monomials[p]);
          rhs = Polynomial(std::move(terms));
          system.degree_max = std::max(system.degree_max, degree);
        }
      }
      if (!rhs) {
        throw RelationNotFoundError("no relation of degree <= " + std::to_string(options.degree_cap) +
                                        " found for " + target_name(seq, d, j),
                                    sequence_name(seq), j);
      }
      Relation& rel = system.relation(seq, j);
      rel = Relation{seq, j, std::move(*rhs)};
      for (std::size_t n = options.check.begin; n < options.check.end; ++n) {
        if (evaluate_rhs(rel.rhs, table, n) != table.value(seq, d * n + j)) {
          throw VerificationError("mined relation " + target_name(seq, d, j) + " = " + rel.rhs.to_string() +
                                      " fails at n = " + std::to_string(n),
                                  n);
        }
      }
    }
  }
  system.verified_up_to = limit;
  return system;
}

std::optional<Violation> verify(RelationSystem& system, const KernelTable& table, std::size_t limit) {
  const unsigned d = system.base();
  if (table.size() < table_size_for(system.pattern, limit)) throw ArgumentError("oracle table too small to verify");
  for (std::size_t n = 0; n < limit; ++n) {
    for (const Relation& rel : system.relations) {
      if (evaluate_rhs(rel.rhs, table, n) != table.value(rel.target, d * n + rel.residue)) {
        system.verified_up_to = n;
        return Violation{n, rel.target, rel.residue};
      }
    }
  }
  system.verified_up_to = std::max(system.verified_up_to, limit);
  return std::nullopt;
}

std::optional<Violation> verify(RelationSystem& system, std::size_t limit) {
  const KernelTable table =
      KernelTable::compute(JKClassifier(system.pattern), table_size_for(system.pattern, limit));
  return verify(system, table, limit);
}

std::string to_text(const RelationSystem& system) {
  const unsigned d = system.base();
  std::ostringstream out;
  for (SeqId seq : kAllSequences) {
    for (unsigned j = 0; j < d; ++j) {
      out << target_name(seq, d, j) << " = " << system.relation(seq, j).rhs.to_string() << '\n';
    }
    out << '\n';
  }
  out << "with the initial values:\n";
  for (SeqId seq : kAllSequences) {
    const char name = sequence_name(seq);
    const auto& iv = system.initial_values[static_cast<std::size_t>(seq)];
    out << name << "_0=" << int(iv[0]) << ", " << name << "_1=" << int(iv[1]) << ", " << name
        << "_2=" << int(iv[2]) << '\n';
  }
  out << "verified for n < " << system.verified_up_to << '\n';
  return out.str();
}

namespace {

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (Monomial m : p.terms()) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Generator& g : m.generators()) gens.push_back(g.name());
    terms.push_back(std::move(gens));
  }
  return terms;
}

Polynomial polynomial_from_json(const nlohmann::json& doc) {
  std::vector<Monomial> terms;
  for (const auto& term : doc) {
    std::uint32_t mask = 0;
    for (const auto& g : term) mask |= std::uint32_t{1} << Generator::parse(g.get<std::string>()).index();
    terms.push_back(Monomial(mask));
  }
  return Polynomial(std::move(terms));
}

}  // namespace

nlohmann::json to_json(const RelationSystem& system) {
  nlohmann::json doc;
  std::vector<int> signs(system.pattern.signs().begin(), system.pattern.signs().end());
  doc["pattern"] = signs;
  doc["d"] = system.base();
  doc["degree_max"] = system.degree_max;
  doc["fit_range"] = {system.fit_range.begin, system.fit_range.end};
  doc["check_range"] = {system.check_range.begin, system.check_range.end};
  doc["verified_up_to"] = system.verified_up_to;
  nlohmann::json rels = nlohmann::json::array();
  for (const Relation& rel : system.relations) {
    rels.push_back({{"target", std::string(1, sequence_name(rel.target))},
                    {"residue", rel.residue},
                    {"rhs", polynomial_to_json(rel.rhs)},
                    {"text", rel.rhs.to_string()}});
  }
  doc["relations"] = std::move(rels);
  nlohmann::json init = nlohmann::json::object();
  for (SeqId seq : kAllSequences) {
    const auto& iv = system.initial_values[static_cast<std::size_t>(seq)];
    init[std::string(1, sequence_name(seq))] = {iv[0], iv[1], iv[2]};
  }
  doc["initial_values"] = std::move(init);
  return doc;
}

RelationSystem relation_system_from_json(const nlohmann::json& doc) {
  try {
    RelationSystem system{PatternVector(doc.at("pattern").get<std::vector<int>>()), {}, {}, 0, 0, {}, {}};
    system.degree_max = doc.at("degree_max").get<unsigned>();
    system.verified_up_to = doc.at("verified_up_to").get<std::size_t>();
    system.fit_range = {doc.at("fit_range").at(0).get<std::size_t>(), doc.at("fit_range").at(1).get<std::size_t>()};
    system.check_range = {doc.at("check_range").at(0).get<std::size_t>(),
                          doc.at("check_range").at(1).get<std::size_t>()};
    const unsigned d = system.base();
    system.relations.resize(kSequenceCount * d);
    std::vector<bool> seen(system.relations.size(), false);
    for (const auto& rel : doc.at("relations")) {
      const std::string target = rel.at("target").get<std::string>();
      if (target.size() != 1) throw ValidationError("bad relation target '" + target + "'");
      const SeqId seq = sequence_from_name(target[0]);
      const unsigned residue = rel.at("residue").get<unsigned>();
      if (residue >= d) throw ValidationError("relation residue out of range");
      const std::size_t slot = static_cast<std::size_t>(seq) * d + residue;
      if (seen[slot]) throw ValidationError("duplicate relation for " + target_name(seq, d, residue));
      seen[slot] = true;
      Polynomial rhs = polynomial_from_json(rel.at("rhs"));
      if (rhs.max_shift() > 1) throw ValidationError("relation right-hand sides may only use S_n and S_{n+1}");
      system.relations[slot] = Relation{seq, residue, std::move(rhs)};
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw ValidationError("relation system must hold one relation per (sequence, residue)");
    }
    for (SeqId seq : kAllSequences) {
      const auto& iv = doc.at("initial_values").at(std::string(1, sequence_name(seq)));
      for (unsigned k = 0; k < 3; ++k) system.initial_values[static_cast<std::size_t>(seq)][k] = iv.at(k).get<std::uint8_t>();
    }
    return system;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed relation system JSON: ") + e.what());
  }
}

}  // namespace hka
