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

#include "hka/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hka/error.hpp"
#include "hka/gf2.hpp"

namespace hka {

char sequence_name(SeqId id) noexcept { return "XYZUVW"[static_cast<std::size_t>(id)]; }

SeqId sequence_from_name(char name) {
  switch (name) {
    case 'X': return SeqId::X;
    case 'Y': return SeqId::Y;
    case 'Z': return SeqId::Z;
    case 'U': return SeqId::U;
    case 'V': return SeqId::V;
    case 'W': return SeqId::W;
    default: throw ValidationError(std::string("unknown sequence name '") + name + "'");
  }
}

std::uint8_t KernelSextuple::get(SeqId id) const noexcept {
  switch (id) {
    case SeqId::X: return x;
    case SeqId::Y: return y;
    case SeqId::Z: return z;
    case SeqId::U: return u;
    case SeqId::V: return v;
    case SeqId::W: return w;
  }
  return 0;
}

namespace {

std::vector<std::uint8_t> membership(const JKClassifier& classifier, std::size_t count, Family which) {
  std::vector<std::uint8_t> bits = classifier.j_indicator(count);
  if (which == Family::K) {
    for (auto& b : bits) b ^= 1;
  }
  return bits;
}

bool constrained_det(const std::vector<std::uint8_t>& member, std::size_t m, std::size_t freed_row) {
  gf2::Matrix rows(m, gf2::BitVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (i == freed_row) {
      rows[i].fill(true);
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) rows[i].set(j, member[i + j] != 0);
  }
  return gf2::determinant(std::move(rows));
}

}  // namespace

std::uint8_t perm_count_mod2(const JKClassifier& classifier, std::size_t m, std::size_t freed_row,
                             Family which) {
  if (freed_row > m) throw ArgumentError("freed row index exceeds the order");
  if (m == 0) return 1;
  const auto member = membership(classifier, 2 * m, which);
  return constrained_det(member, m, freed_row) ? 1 : 0;
}

std::uint64_t brute_perm_count(const JKClassifier& classifier, std::size_t m, std::size_t freed_row,
                               Family which) {
  if (m > 8) throw ArgumentError("brute_perm_count refuses m > 8");
  if (freed_row > m) throw ArgumentError("freed row index exceeds the order");
  const auto member = membership(classifier, 2 * m + 1, which);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (i != freed_row && !member[i + perm[i]]) ok = false;
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

KernelSextuple sextuple(const JKClassifier& classifier, std::size_t n) {
  KernelSextuple s{n, 0, 1, 0, 0, 1, 0};
  if (n == 0) return s;
  const auto in_j = membership(classifier, 2 * n, Family::J);
  const auto in_k = membership(classifier, 2 * n, Family::K);
  std::uint8_t x = 0, u = 0;
  for (std::size_t l = 0; l < n; ++l) {
    x ^= constrained_det(in_j, n, l);
    u ^= constrained_det(in_k, n, l);
  }
  s.x = x;
  s.u = u;
  s.y = constrained_det(in_j, n, n);
  s.v = constrained_det(in_k, n, n);
  s.z = constrained_det(in_j, n, n - 1);
  s.w = constrained_det(in_k, n, n - 1);
  return s;
}

KernelTable KernelTable::compute(const JKClassifier& classifier, std::size_t count) {
  KernelTable table;
  table.size_ = count;
  if (count == 0) return table;
  const std::size_t terms = 2 * count + 2;
  const auto in_j = classifier.j_indicator(terms + 1);
  gf2::BitVector j_seq(terms), k_seq(terms), diff_seq(terms);
  for (std::size_t t = 0; t < terms; ++t) {
    j_seq.set(t, in_j[t] != 0);
    k_seq.set(t, in_j[t] == 0);
    diff_seq.set(t, in_j[t] != in_j[t + 1]);
  }
  const auto y = gf2::hankel_determinants(j_seq, count);
  const auto v = gf2::hankel_determinants(k_seq, count);
  const auto h_diff = gf2::hankel_determinants(diff_seq, count);

  for (auto& seq : table.values_) seq.assign(count, 0);
  for (std::size_t n = 0; n < count; ++n) {
    const std::uint8_t yn = y[n], vn = v[n];
    const std::uint8_t zn = n == 0 ? 0 : h_diff[n - 1];
    table.values_[static_cast<std::size_t>(SeqId::X)][n] = yn ^ vn;
    table.values_[static_cast<std::size_t>(SeqId::Y)][n] = yn;
    table.values_[static_cast<std::size_t>(SeqId::Z)][n] = zn;
    table.values_[static_cast<std::size_t>(SeqId::U)][n] = yn ^ vn;
    table.values_[static_cast<std::size_t>(SeqId::V)][n] = vn;
    table.values_[static_cast<std::size_t>(SeqId::W)][n] = zn;
  }
  return table;
}

KernelSextuple KernelTable::at(std::size_t n) const {
  return KernelSextuple{n,
                        value(SeqId::X, n),
                        value(SeqId::Y, n),
                        value(SeqId::Z, n),
                        value(SeqId::U, n),
                        value(SeqId::V, n),
                        value(SeqId::W, n)};
}

}  // namespace hka
