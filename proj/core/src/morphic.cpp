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

#include "hka/morphic.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "hka/error.hpp"

namespace hka {

Substitution extract_substitution(const Dfao& a) {
  if (a.reading() != Reading::msd_first) {
    throw StructuralError(Stage::substitution, "substitutions come from msd-first automata");
  }
  if (a.next(a.initial(), 0) != a.initial()) {
    throw StructuralError(Stage::substitution, "initial state is not fixed by digit 0");
  }
  Substitution s;
  s.base = a.base();
  s.images = a.table();
  s.coding = a.outputs();
  s.start = a.initial();
  return s;
}

std::vector<std::uint8_t> expand_fixed_point(const Substitution& s, std::size_t count) {
  if (s.images.empty() || s.images[s.start].empty() || s.images[s.start][0] != s.start) {
    throw StructuralError(Stage::substitution, "substitution is not prolongable on its start letter");
  }
  std::vector<std::uint32_t> word{s.start};
  std::vector<std::uint32_t> next;
  while (word.size() < count) {
    next.clear();
    next.reserve(word.size() * s.base);
    // The fixed point is a prefix of its own image, so only the first
    // ceil(count / d) letters need expanding.
    const std::size_t needed = std::min(word.size(), (count + s.base - 1) / s.base);
    for (std::size_t i = 0; i < needed; ++i) {
      const auto& image = s.images[word[i]];
      next.insert(next.end(), image.begin(), image.end());
    }
    word.swap(next);
  }
  std::vector<std::uint8_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = s.coding[word[i]];
  return out;
}

std::vector<std::uint64_t> ones_positions(std::span<const std::uint8_t> prefix) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i]) out.push_back(i);
  }
  return out;
}

namespace {

ScaleMaximum tail_maximum(std::span<const std::uint64_t> positions, std::uint64_t threshold) {
  ScaleMaximum scale{threshold, 0, 0};
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    if (positions[i] == 0 || positions[i] < threshold) continue;
    scale.max_ratio = std::max(scale.max_ratio, double(positions[i + 1]) / double(positions[i]));
    ++scale.samples;
  }
  return scale;
}

}  // namespace

RhoEstimate estimate_rho(std::span<const std::uint64_t> positions, unsigned base, double cutoff_fraction) {
  if (base < 2) throw ArgumentError("estimate_rho needs base >= 2");
  if (positions.empty()) throw InapplicableError("exponent method inapplicable: the sequence has no nonzero terms");
  RhoEstimate est;
  est.max_position = positions.back();
  const auto threshold = static_cast<std::uint64_t>(std::ceil(cutoff_fraction * double(est.max_position)));
  const ScaleMaximum tail = tail_maximum(positions, threshold);
  if (tail.samples < 32) {
    throw InapplicableError("exponent method inapplicable: only " + std::to_string(tail.samples) +
                            " nonzero reduced Hankel determinants beyond the cutoff (need 32)");
  }
  est.rho = tail.max_ratio;
  est.samples = tail.samples;
  // Past max_position / d the successor of the record position can fall
  // outside the prefix, which truncates the tail maximum.
  for (std::uint64_t scale = base; scale <= est.max_position / base; scale *= base) {
    ScaleMaximum s = tail_maximum(positions, scale);
    if (s.samples == 0) break;
    est.scales.push_back(s);
    if (scale > std::numeric_limits<std::uint64_t>::max() / base) break;
  }
  if (est.scales.size() >= 2) {
    est.uncertainty = std::abs(est.scales[est.scales.size() - 2].max_ratio - est.scales.back().max_ratio);
  }
  return est;
}

double mu_hankel(double rho, unsigned d) {
  if (!(rho >= 1)) throw ArgumentError("rho must be >= 1");
  if (rho == 1) return 2;
  return (1 + rho) * std::min(rho * rho, double(d));
}

namespace {

// Sequences identified by their first kPrefix terms.
constexpr std::size_t kPrefix = 256;

std::vector<Sign> kernel_prefix(const PatternVector& pattern, std::uint64_t scale, std::uint64_t offset) {
  std::vector<Sign> out(kPrefix);
  for (std::size_t n = 0; n < kPrefix; ++n) out[n] = f_term(pattern, scale * n + offset);
  return out;
}

}  // namespace

AcParameters ac_parameters(const PatternVector& pattern) {
  if (pattern.is_constant()) {
    throw DegenerateSequenceError("pattern " + pattern.to_string() + " has no -1 entry; f is constant");
  }
  const unsigned d = pattern.base();
  AcParameters params;

  // d-kernel: close {f} under Lambda_i : (scale, offset) -> (d scale, offset + i scale).
  {
    struct Element {
      std::uint64_t scale, offset;
    };
    std::map<std::vector<Sign>, bool> seen;
    std::vector<Element> queue{{1, 0}};
    seen.emplace(kernel_prefix(pattern, 1, 0), true);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Element e = queue[i];
      if (e.scale > std::numeric_limits<std::uint64_t>::max() / (d * kPrefix)) {
        throw ResourceError("d-kernel closure did not terminate");
      }
      for (unsigned digit = 0; digit < d; ++digit) {
        const Element child{e.scale * d, e.offset + digit * e.scale};
        if (seen.emplace(kernel_prefix(pattern, child.scale, child.offset), true).second) queue.push_back(child);
      }
    }
    params.kernel_size_m = static_cast<unsigned>(seen.size());
  }

  // Internal alphabet of the sign substitution: letters reachable from +1,
  // merged when they generate the same word.
  {
    auto image = [&](Sign letter) {
      std::vector<Sign> out(d);
      for (unsigned i = 0; i < d; ++i) out[i] = static_cast<Sign>(letter * pattern[i]);
      return out;
    };
    std::vector<Sign> letters{1};
    for (std::size_t i = 0; i < letters.size(); ++i) {
      for (Sign t : image(letters[i])) {
        if (std::find(letters.begin(), letters.end(), t) == letters.end()) letters.push_back(t);
      }
    }
    std::map<std::vector<Sign>, bool> words;
    for (Sign letter : letters) {
      std::vector<Sign> word{letter};
      while (word.size() < kPrefix) {
        std::vector<Sign> next;
        for (Sign x : word) {
          const auto img = image(x);
          next.insert(next.end(), img.begin(), img.end());
        }
        word.swap(next);
      }
      word.resize(kPrefix);
      words.emplace(std::move(word), true);
    }
    params.internal_alphabet_c = static_cast<unsigned>(words.size());
  }
  return params;
}

std::uint64_t mu_adamczewski(unsigned c, unsigned d, unsigned m) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t power = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (power > limit / d) throw ArgumentError("c d (d^m + 1) overflows 64 bits");
    power *= d;
  }
  if (power == limit) throw ArgumentError("c d (d^m + 1) overflows 64 bits");
  const std::uint64_t tail = power + 1;
  if (tail > limit / d || tail * d > limit / std::max(1u, c)) throw ArgumentError("c d (d^m + 1) overflows 64 bits");
  return std::uint64_t{c} * d * tail;
}

ExponentReport exponent_report(const PatternVector& pattern, const Substitution& z, unsigned prefix_exponent,
                               std::optional<double> assume_rho) {
  const unsigned d = pattern.base();
  if (z.base != d) throw ArgumentError("substitution base does not match the pattern");
  ExponentReport report;
  report.base = d;
  const AcParameters ac = ac_parameters(pattern);
  report.kernel_size_m = ac.kernel_size_m;
  report.internal_alphabet_c = ac.internal_alphabet_c;
  report.mu_adamczewski = mu_adamczewski(ac.internal_alphabet_c, d, ac.kernel_size_m);

  std::uint64_t length = 1;
  for (unsigned i = 0; i < prefix_exponent; ++i) {
    if (length > (std::uint64_t{1} << 32) / d) throw ArgumentError("prefix d^k is too long");
    length *= d;
  }
  report.prefix_len = static_cast<std::size_t>(length);
  const auto prefix = expand_fixed_point(z, report.prefix_len);
  const auto positions = ones_positions(prefix);
  report.ones_count = positions.size();

  try {
    const RhoEstimate est = estimate_rho(positions, d);
    report.rho_estimate = est.rho;
    report.rho_uncertainty = est.uncertainty;
    report.scales = est.scales;
  } catch (const InapplicableError& e) {
    if (!assume_rho) throw;
    report.notes.push_back(std::string("rho estimate unavailable: ") + e.what());
  }
  if (assume_rho) {
    if (!(*assume_rho >= 1)) throw ArgumentError("assumed rho must be >= 1");
    report.assumed_rho = assume_rho;
    report.rho_used = *assume_rho;
    report.mu_hankel = report.mu_hankel_low = report.mu_hankel_high = mu_hankel(*assume_rho, d);
    report.notes.push_back("rho taken as asserted by the caller");
  } else {
    report.rho_used = *report.rho_estimate;
    report.mu_hankel = mu_hankel(report.rho_used, d);
    report.mu_hankel_low = mu_hankel(std::max(1.0, report.rho_used - report.rho_uncertainty), d);
    report.mu_hankel_high = mu_hankel(report.rho_used + report.rho_uncertainty, d);
    report.notes.push_back("rho is an empirical limsup estimate over a finite prefix, not a proved value");
  }
  report.notes.push_back(
      "nonvanishing of the functional-equation coefficients at 1/b^(d^m) holds for the whole family by a "
      "valuation argument; not re-checked numerically");
  return report;
}

std::string to_text(const Substitution& s) {
  std::ostringstream out;
  out << "morphism= [";
  for (std::size_t q = 0; q < s.images.size(); ++q) {
    if (q) out << ", ";
    out << '[';
    for (std::size_t i = 0; i < s.images[q].size(); ++i) {
      if (i) out << ',';
      out << s.images[q][i];
    }
    out << ']';
  }
  out << "]\ncoding= [";
  for (std::size_t q = 0; q < s.coding.size(); ++q) {
    if (q) out << ", ";
    out << int(s.coding[q]);
  }
  out << "]\n";
  return out.str();
}

nlohmann::json to_json(const Substitution& s) {
  return nlohmann::json{{"d", s.base}, {"morphism", s.images}, {"coding", s.coding}, {"start", s.start}};
}

Substitution substitution_from_json(const nlohmann::json& doc) {
  try {
    Substitution s;
    s.base = doc.at("d").get<unsigned>();
    s.images = doc.at("morphism").get<std::vector<std::vector<std::uint32_t>>>();
    s.coding = doc.at("coding").get<std::vector<std::uint8_t>>();
    s.start = doc.at("start").get<std::uint32_t>();
    if (s.base < 2 || s.images.size() != s.coding.size() || s.start >= s.images.size()) {
      throw ValidationError("inconsistent substitution");
    }
    for (const auto& image : s.images) {
      if (image.size() != s.base) throw ValidationError("substitution images must have length d");
      for (auto letter : image) {
        if (letter >= s.images.size()) throw ValidationError("substitution letter out of range");
      }
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed substitution JSON: ") + e.what());
  }
}

std::string to_text(const ExponentReport& r) {
  std::ostringstream out;
  out << std::setprecision(6) << std::fixed;
  out << "prefix length= " << r.prefix_len << ", ones= " << r.ones_count << '\n';
  if (r.rho_estimate) {
    out << "rho estimate= " << *r.rho_estimate << " (scale-to-scale change " << r.rho_uncertainty << ")\n";
  }
  if (r.assumed_rho) out << "rho assumed= " << *r.assumed_rho << '\n';
  out << "Hankel bound:       mu <= (1+rho) min(rho^2, d) = " << r.mu_hankel;
  if (!r.assumed_rho) out << "  [" << r.mu_hankel_low << ", " << r.mu_hankel_high << "]";
  out << '\n';
  out << "automatic bound:    mu <= c d (d^m + 1)        = " << r.mu_adamczewski << "  (c=" << r.internal_alphabet_c
      << ", m=" << r.kernel_size_m << ", d=" << r.base << ")\n";
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  return out.str();
}

nlohmann::json to_json(const ExponentReport& r) {
  nlohmann::json scales = nlohmann::json::array();
  for (const auto& s : r.scales) {
    scales.push_back({{"threshold", s.threshold}, {"max_ratio", s.max_ratio}, {"samples", s.samples}});
  }
  nlohmann::json doc{{"d", r.base},
                     {"rho_estimate", nullptr},
                     {"rho_uncertainty", r.rho_uncertainty},
                     {"assumed_rho", nullptr},
                     {"rho_used", r.rho_used},
                     {"prefix_len", r.prefix_len},
                     {"ones_count", r.ones_count},
                     {"mu_hankel", r.mu_hankel},
                     {"mu_hankel_interval", {r.mu_hankel_low, r.mu_hankel_high}},
                     {"kernel_size_m", r.kernel_size_m},
                     {"internal_alphabet_c", r.internal_alphabet_c},
                     {"mu_adamczewski", r.mu_adamczewski},
                     {"scales", scales},
                     {"notes", r.notes}};
  if (r.rho_estimate) doc["rho_estimate"] = *r.rho_estimate;
  if (r.assumed_rho) doc["assumed_rho"] = *r.assumed_rho;
  return doc;
}

ExponentReport exponent_report_from_json(const nlohmann::json& doc) {
  try {
    ExponentReport r;
    r.base = doc.at("d").get<unsigned>();
    if (!doc.at("rho_estimate").is_null()) r.rho_estimate = doc.at("rho_estimate").get<double>();
    r.rho_uncertainty = doc.at("rho_uncertainty").get<double>();
    if (!doc.at("assumed_rho").is_null()) r.assumed_rho = doc.at("assumed_rho").get<double>();
    r.rho_used = doc.at("rho_used").get<double>();
    r.prefix_len = doc.at("prefix_len").get<std::size_t>();
    r.ones_count = doc.at("ones_count").get<std::size_t>();
    r.mu_hankel = doc.at("mu_hankel").get<double>();
    r.mu_hankel_low = doc.at("mu_hankel_interval").at(0).get<double>();
    r.mu_hankel_high = doc.at("mu_hankel_interval").at(1).get<double>();
    r.kernel_size_m = doc.at("kernel_size_m").get<unsigned>();
    r.internal_alphabet_c = doc.at("internal_alphabet_c").get<unsigned>();
    r.mu_adamczewski = doc.at("mu_adamczewski").get<std::uint64_t>();
    for (const auto& s : doc.at("scales")) {
      r.scales.push_back(ScaleMaximum{s.at("threshold").get<std::uint64_t>(), s.at("max_ratio").get<double>(),
                                      s.at("samples").get<std::size_t>()});
    }
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed exponent report JSON: ") + e.what());
  }
}

}  // namespace hka
