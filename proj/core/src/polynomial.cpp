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

#include "hka/polynomial.hpp"

#include <algorithm>
#include <bit>

#include "hka/error.hpp"

namespace hka {

std::string Generator::name() const {
  std::string out(1, sequence_name(seq));
  if (shift == 0) return out + "_n";
  return out + "_{n+" + std::to_string(shift) + "}";
}

Generator Generator::parse(std::string_view text) {
  if (text.size() < 3 || text[1] != '_') throw ValidationError("bad generator '" + std::string(text) + "'");
  const SeqId seq = sequence_from_name(text[0]);
  const std::string_view rest = text.substr(2);
  if (rest == "n") return Generator{seq, 0};
  if (rest == "{n+1}") return Generator{seq, 1};
  if (rest == "{n+2}") return Generator{seq, 2};
  throw ValidationError("bad generator '" + std::string(text) + "'");
}

unsigned Monomial::degree() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

std::vector<Generator> Monomial::generators() const {
  std::vector<Generator> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) {
    out.push_back(Generator::from_index(static_cast<unsigned>(std::countr_zero(m))));
  }
  return out;
}

unsigned Monomial::max_shift() const noexcept {
  if (!mask_) return 0;
  return (31u - static_cast<unsigned>(std::countl_zero(mask_))) / 6;
}

std::string Monomial::to_string() const {
  if (!mask_) return "1";
  // Print in the conventional order Z_{n+1} Y_n: higher shift first, then
  // sequence order, so that the text reads like a hand-written recurrence.
  auto gens = generators();
  std::stable_sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
    if (a.shift != b.shift) return a.shift > b.shift;
    return static_cast<unsigned>(a.seq) < static_cast<unsigned>(b.seq);
  });
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ' ';
    out += g.name();
  }
  return out;
}

bool monomial_less(Monomial a, Monomial b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const std::uint32_t diff = a.mask() ^ b.mask();
  if (!diff) return false;
  // For equal-size sets the first difference of the sorted index lists is
  // the lowest element of the symmetric difference.
  return (a.mask() & (diff & (~diff + 1))) != 0;
}

namespace {

void normalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), [](Monomial a, Monomial b) { return a.mask() < b.mask(); });
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2) out.push_back(terms[i]);
    i = j;
  }
  std::sort(out.begin(), out.end(), monomial_less);
  terms.swap(out);
}

}  // namespace

Polynomial::Polynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) { normalize(terms_); }

unsigned Polynomial::degree() const noexcept {
  unsigned deg = 0;
  for (Monomial m : terms_) deg = std::max(deg, m.degree());
  return deg;
}

unsigned Polynomial::max_shift() const noexcept {
  unsigned s = 0;
  for (Monomial m : terms_) s = std::max(s, m.max_shift());
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  std::vector<Monomial> merged = terms_;
  merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
  normalize(merged);
  terms_.swap(merged);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Monomial> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (Monomial x : a.terms_) {
    for (Monomial y : b.terms_) products.push_back(x * y);
  }
  return Polynomial(std::move(products));
}

Polynomial Polynomial::shifted() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (Monomial m : terms_) {
    if (m.max_shift() >= 2 && !m.is_constant()) {
      throw StructuralError(Stage::automaton, "rewrite needs a third shift of " + m.to_string());
    }
    // Shifting every generator by one moves its bit up by six positions.
    out.push_back(Monomial(m.mask() << 6));
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (Monomial m : terms_) {
    if (!out.empty()) out += " + ";
    out += m.to_string();
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<Monomial> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    // '+' also occurs inside "{n+1}"; only split at a '+' outside braces.
    std::size_t split = pos;
    int depth = 0;
    for (; split < text.size(); ++split) {
      if (text[split] == '{') ++depth;
      if (text[split] == '}') --depth;
      if (text[split] == '+' && depth == 0) break;
    }
    std::string_view item = text.substr(pos, split - pos);
    std::uint32_t mask = 0;
    bool zero = false;
    std::size_t i = 0;
    bool any = false;
    while (i < item.size()) {
      while (i < item.size() && item[i] == ' ') ++i;
      if (i >= item.size()) break;
      std::size_t j = i;
      while (j < item.size() && item[j] != ' ') ++j;
      const std::string_view token = item.substr(i, j - i);
      any = true;
      if (token == "1") {
      } else if (token == "0") {
        zero = true;
      } else {
        mask |= std::uint32_t{1} << Generator::parse(token).index();
      }
      i = j;
    }
    if (!any) throw ValidationError("empty term in polynomial '" + std::string(text) + "'");
    if (!zero) terms.push_back(Monomial(mask));
    pos = split + 1;
  }
  return Polynomial(std::move(terms));
}

}  // namespace hka
