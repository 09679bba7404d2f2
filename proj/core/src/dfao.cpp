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

#include "hka/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "hka/error.hpp"

namespace hka {

const char* to_string(Reading reading) noexcept {
  return reading == Reading::lsd_first ? "lsd-first" : "msd-first";
}

Dfao::Dfao(unsigned base, Reading reading, std::vector<std::vector<std::uint32_t>> transitions,
           std::vector<std::uint8_t> outputs, std::uint32_t initial)
    : base_(base), reading_(reading), outputs_(std::move(outputs)), initial_(initial) {
  if (base_ < 2) throw ValidationError("DFAO base must be >= 2");
  if (transitions.size() != outputs_.size() || outputs_.empty()) {
    throw ValidationError("DFAO needs one output per state and at least one state");
  }
  if (initial_ >= outputs_.size()) throw ValidationError("DFAO initial state out of range");
  delta_.reserve(transitions.size() * base_);
  for (const auto& row : transitions) {
    if (row.size() != base_) throw ValidationError("DFAO transition row must have one entry per digit");
    for (std::uint32_t t : row) {
      if (t >= outputs_.size()) throw ValidationError("DFAO transition target out of range");
      delta_.push_back(t);
    }
  }
  for (std::uint8_t o : outputs_) {
    if (o > 1) throw ValidationError("DFAO outputs must be 0 or 1");
  }
}

std::vector<std::vector<std::uint32_t>> Dfao::table() const {
  std::vector<std::vector<std::uint32_t>> out(num_states());
  for (std::size_t q = 0; q < num_states(); ++q) {
    out[q].assign(delta_.begin() + static_cast<std::ptrdiff_t>(q * base_),
                  delta_.begin() + static_cast<std::ptrdiff_t>((q + 1) * base_));
  }
  return out;
}

std::uint32_t Dfao::run(std::uint64_t n) const {
  std::uint32_t q = initial_;
  if (reading_ == Reading::lsd_first) {
    for (; n > 0; n /= base_) q = next(q, static_cast<unsigned>(n % base_));
    return q;
  }
  unsigned digits[64];
  unsigned count = 0;
  for (; n > 0; n /= base_) digits[count++] = static_cast<unsigned>(n % base_);
  while (count > 0) q = next(q, digits[--count]);
  return q;
}

Dfao canonical_form(const Dfao& a) {
  const std::uint32_t unseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> rename(a.num_states(), unseen);
  std::vector<std::uint32_t> order{a.initial()};
  rename[a.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (unsigned digit = 0; digit < a.base(); ++digit) {
      const std::uint32_t t = a.next(order[i], digit);
      if (rename[t] == unseen) {
        rename[t] = static_cast<std::uint32_t>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> table(order.size(), std::vector<std::uint32_t>(a.base()));
  std::vector<std::uint8_t> outputs(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    outputs[i] = a.output(order[i]);
    for (unsigned digit = 0; digit < a.base(); ++digit) table[i][digit] = rename[a.next(order[i], digit)];
  }
  return Dfao(a.base(), a.reading(), std::move(table), std::move(outputs), 0);
}

Dfao minimize(const Dfao& input) {
  const Dfao a = canonical_form(input);
  const std::size_t n = a.num_states();
  const unsigned d = a.base();
  std::vector<std::uint32_t> block(n);
  for (std::size_t q = 0; q < n; ++q) block[q] = a.output(static_cast<std::uint32_t>(q));
  std::size_t blocks = 0;
  {
    std::vector<bool> used(2, false);
    for (auto b : block) used[b] = true;
    blocks = static_cast<std::size_t>(used[0]) + static_cast<std::size_t>(used[1]);
  }
  // Moore refinement: split by (block, successor blocks) until stable.
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> refined(n);
    std::vector<std::uint32_t> signature(d + 1);
    for (std::size_t q = 0; q < n; ++q) {
      signature[0] = block[q];
      for (unsigned digit = 0; digit < d; ++digit) {
        signature[digit + 1] = block[a.next(static_cast<std::uint32_t>(q), digit)];
      }
      auto [it, inserted] = ids.emplace(signature, static_cast<std::uint32_t>(ids.size()));
      refined[q] = it->second;
    }
    block.swap(refined);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }
  std::vector<std::vector<std::uint32_t>> table(blocks, std::vector<std::uint32_t>(d));
  std::vector<std::uint8_t> outputs(blocks);
  for (std::size_t q = 0; q < n; ++q) {
    outputs[block[q]] = a.output(static_cast<std::uint32_t>(q));
    for (unsigned digit = 0; digit < d; ++digit) {
      table[block[q]][digit] = block[a.next(static_cast<std::uint32_t>(q), digit)];
    }
  }
  return canonical_form(Dfao(d, a.reading(), std::move(table), std::move(outputs), block[a.initial()]));
}

bool isomorphic(const Dfao& a, const Dfao& b) {
  if (a.base() != b.base() || a.reading() != b.reading() || a.num_states() != b.num_states()) return false;
  const std::uint32_t unseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> forward(a.num_states(), unseen), backward(b.num_states(), unseen);
  std::deque<std::uint32_t> queue{a.initial()};
  forward[a.initial()] = b.initial();
  backward[b.initial()] = a.initial();
  std::size_t mapped = 1;
  while (!queue.empty()) {
    const std::uint32_t p = queue.front();
    queue.pop_front();
    const std::uint32_t q = forward[p];
    if (a.output(p) != b.output(q)) return false;
    for (unsigned digit = 0; digit < a.base(); ++digit) {
      const std::uint32_t pt = a.next(p, digit), qt = b.next(q, digit);
      if (forward[pt] == unseen && backward[qt] == unseen) {
        forward[pt] = qt;
        backward[qt] = pt;
        ++mapped;
        queue.push_back(pt);
      } else if (forward[pt] != qt || backward[qt] != pt) {
        return false;
      }
    }
  }
  return mapped == a.num_states();
}

std::string to_text(const Dfao& a) {
  std::ostringstream out;
  out << "transition function=\n [";
  const auto table = a.table();
  for (std::size_t q = 0; q < table.size(); ++q) {
    if (q) out << ", ";
    out << '[';
    for (unsigned digit = 0; digit < a.base(); ++digit) {
      if (digit) out << ',';
      out << table[q][digit];
    }
    out << ']';
  }
  out << "]\noutput function= [";
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    if (q) out << ", ";
    out << int(a.output(static_cast<std::uint32_t>(q)));
  }
  out << "]\n";
  return out.str();
}

namespace {

std::string state_name(std::size_t q, std::size_t total) {
  if (total <= 26) return std::string(1, static_cast<char>('a' + q));
  return "q" + std::to_string(q);
}

}  // namespace

std::string to_dot(const Dfao& a, const std::string& graph_name) {
  std::ostringstream out;
  const std::size_t n = a.num_states();
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  label=\"" << to_string(a.reading()) << ", d=" << a.base() << "\";\n";
  out << "  __start [shape=point];\n";
  for (std::size_t q = 0; q < n; ++q) {
    out << "  s" << q << " [shape=circle, label=\"" << state_name(q, n) << '/' << int(a.output(static_cast<std::uint32_t>(q)))
        << "\"];\n";
  }
  out << "  __start -> s" << a.initial() << ";\n";
  for (std::size_t q = 0; q < n; ++q) {
    std::map<std::uint32_t, std::string> labels;
    for (unsigned digit = 0; digit < a.base(); ++digit) {
      std::string& label = labels[a.next(static_cast<std::uint32_t>(q), digit)];
      if (!label.empty()) label += ',';
      label += std::to_string(digit);
    }
    for (const auto& [target, label] : labels) {
      out << "  s" << q << " -> s" << target << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const Dfao& a) {
  return nlohmann::json{{"reading", to_string(a.reading())},
                        {"d", a.base()},
                        {"initial", a.initial()},
                        {"transitions", a.table()},
                        {"outputs", a.outputs()}};
}

Dfao dfao_from_json(const nlohmann::json& doc) {
  try {
    const std::string reading = doc.at("reading").get<std::string>();
    Reading r;
    if (reading == "lsd-first") {
      r = Reading::lsd_first;
    } else if (reading == "msd-first") {
      r = Reading::msd_first;
    } else {
      throw ValidationError("unknown reading direction '" + reading + "'");
    }
    return Dfao(doc.at("d").get<unsigned>(), r, doc.at("transitions").get<std::vector<std::vector<std::uint32_t>>>(),
                doc.at("outputs").get<std::vector<std::uint8_t>>(), doc.at("initial").get<std::uint32_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed DFAO JSON: ") + e.what());
  }
}

}  // namespace hka
