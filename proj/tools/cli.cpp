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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hka/acceptance.hpp"
#include "hka/error.hpp"
#include "hka/hankel.hpp"
#include "hka/morphic.hpp"
#include "hka/pipeline.hpp"

namespace hka::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string pattern_text;
  std::size_t count = 16;
  std::optional<unsigned> prefix_exponent;
  unsigned degree_max = 3;
  std::size_t fit_end = 2048;
  std::size_t check_end = 20480;
  std::string format = "text";
  std::string reading = "lsd";
  std::optional<double> assume_rho;
  std::string out_path;
  bool error_json = false;
  bool quiet = false;
};

// Largest k with d^k <= 2^19.
unsigned default_prefix_exponent(unsigned d) {
  unsigned k = 0;
  std::uint64_t length = 1;
  while (length * d <= (std::uint64_t{1} << 19)) {
    length *= d;
    ++k;
  }
  return k;
}

int exit_code_for(Stage stage) {
  switch (stage) {
    case Stage::validation:
    case Stage::argument: return kValidation;
    case Stage::mining: return kMining;
    case Stage::automaton: return kAutomaton;
    case Stage::substitution: return kSubstitution;
    case Stage::exponent: return kExponent;
    case Stage::internal: return kInternal;
  }
  return kInternal;
}

std::string signs_text(const PatternVector& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.base(); ++i) out += (i ? ", " : "") + std::to_string(int(p[i]));
  return out + "]";
}

std::string hankel_table(const HankelPrefix& exact, const std::vector<std::uint8_t>& reduced) {
  const std::size_t count = reduced.size();
  std::vector<std::string> rows[3];
  for (std::size_t n = 0; n < count; ++n) {
    rows[0].push_back(std::to_string(n));
    rows[1].push_back(exact.values[n].str());
    rows[2].push_back(std::to_string(int(reduced[n])));
  }
  static const char* labels[3] = {"n", "H_n", "u_n"};
  std::ostringstream out;
  for (int r = 0; r < 3; ++r) {
    out << std::left << std::setw(3) << labels[r];
    for (std::size_t n = 0; n < count; ++n) {
      std::size_t width = 0;
      for (const auto& row : rows) width = std::max(width, row[n].size());
      out << "  " << std::right << std::setw(static_cast<int>(width)) << rows[r][n];
    }
    out << '\n';
  }
  return out.str();
}

json hankel_json(const PatternVector& p, const HankelPrefix& exact, const std::vector<std::uint8_t>& reduced) {
  json h = json::array();
  for (const auto& v : exact.values) h.push_back(v.str());
  return json{{"pattern", p.signs()}, {"d", p.base()}, {"count", reduced.size()}, {"H", h}, {"u", reduced}};
}

class Runner {
 public:
  Runner(const RunConfig& config, std::ostream& err) : config_(config), err_(err) {}

  std::string execute() {
    if (config_.command == "selftest") return selftest();
    if (config_.format != "text" && config_.format != "json" && config_.format != "dot") {
      throw ArgumentError("--format must be text, json or dot");
    }
    if (config_.format == "dot" && config_.command != "automaton") {
      throw ArgumentError("--format dot is only available for the automaton command");
    }
    pattern_.emplace(PatternVector::parse(config_.pattern_text));
    if (config_.command == "hankel") return hankel();
    if (config_.command == "mine") return mine_relations();
    if (config_.command == "automaton") return automaton();
    if (config_.command == "substitution") return substitution();
    if (config_.command == "exponent") return exponent();
    if (config_.command == "report") return report();
    throw ArgumentError("unknown command " + config_.command);
  }

  bool selftest_failed() const { return selftest_failed_; }

 private:
  bool json_out() const { return config_.format == "json"; }

  void say(const std::string& message) const {
    if (!config_.quiet) err_ << "hka: " << message << '\n';
  }

  const PipelineResult& pipeline() {
    if (!pipeline_) {
      if (config_.count == 0) throw ArgumentError("--count must be >= 1");
      PipelineOptions options;
      options.mining.degree_max = config_.degree_max;
      options.mining.degree_cap = std::max(config_.degree_max, options.mining.degree_cap);
      options.mining.fit = {0, config_.fit_end};
      options.mining.check = {config_.fit_end, config_.check_end};
      if (config_.fit_end == 0 || config_.check_end <= config_.fit_end) {
        throw ArgumentError("need 0 < --fit-end < --check-end");
      }
      options.progress = [this](const std::string& m) { say(m); };
      pipeline_.emplace(run_pipeline(*pattern_, options));
    }
    return *pipeline_;
  }

  ExponentReport exponent_data() {
    const PipelineResult& r = pipeline();
    const unsigned k = config_.prefix_exponent.value_or(default_prefix_exponent(pattern_->base()));
    say("expanding " + std::to_string(pattern_->base()) + "^" + std::to_string(k) + " terms");
    return exponent_report(*pattern_, r.substitution, k, config_.assume_rho);
  }

  std::string hankel() {
    if (config_.count == 0) throw ArgumentError("--count must be >= 1");
    const HankelPrefix exact = hankel_prefix_exact(*pattern_, config_.count);
    const auto reduced = hankel_prefix_mod2(*pattern_, config_.count);
    if (json_out()) return hankel_json(*pattern_, exact, reduced).dump(2) + '\n';
    return hankel_table(exact, reduced);
  }

  std::string mine_relations() {
    const RelationSystem& s = pipeline().system;
    return json_out() ? to_json(s).dump(2) + '\n' : to_text(s);
  }

  std::string automaton() {
    if (config_.reading != "lsd" && config_.reading != "msd") throw ArgumentError("--reading must be lsd or msd");
    const Dfao& a = config_.reading == "lsd" ? pipeline().lsd : pipeline().msd;
    if (config_.format == "dot") return to_dot(a);
    return json_out() ? to_json(a).dump(2) + '\n' : to_text(a);
  }

  std::string substitution() {
    const Substitution& s = pipeline().substitution;
    return json_out() ? to_json(s).dump(2) + '\n' : to_text(s);
  }

  std::string exponent() {
    const ExponentReport r = exponent_data();
    return json_out() ? to_json(r).dump(2) + '\n' : to_text(r);
  }

  // The exponent section is the only optional part: an inapplicable or
  // degenerate pattern still gets the rest of its report.
  std::string report() {
    const PipelineResult& r = pipeline();
    const HankelPrefix exact = hankel_prefix_exact(*pattern_, config_.count);
    const auto reduced = hankel_prefix_mod2(*pattern_, config_.count);
    std::optional<ExponentReport> exp;
    std::string exp_error;
    try {
      exp = exponent_data();
    } catch (const Error& e) {
      if (e.stage() != Stage::exponent) throw;
      exp_error = e.what();
      say("exponent section skipped: " + exp_error);
    }
    if (json_out()) {
      json doc{{"pattern", pattern_->signs()},
               {"d", pattern_->base()},
               {"relations", to_json(r.system)},
               {"verified_up_to", r.system.verified_up_to},
               {"automaton", to_json(r.lsd)},
               {"substitution", to_json(r.substitution)},
               {"hankel", hankel_json(*pattern_, exact, reduced)}};
      doc["exponent"] = exp ? to_json(*exp) : json{{"error", exp_error}};
      return doc.dump(2) + '\n';
    }
    std::ostringstream out;
    out << "v= " << signs_text(*pattern_) << '\n';
    out << "d= " << pattern_->base() << '\n';
    out << "Automaton:\n" << to_text(r.lsd) << '\n';
    out << "Substitution:\n" << to_text(r.substitution) << '\n';
    out << "Relations:\n" << to_text(r.system) << '\n';
    out << "Hankel determinants:\n" << hankel_table(exact, reduced) << '\n';
    out << "Exponent:\n";
    if (exp) {
      out << to_text(*exp);
    } else {
      out << "unavailable: " << exp_error << '\n';
    }
    return out.str();
  }

  std::string selftest() {
    AcceptanceHooks hooks;
    hooks.progress = [this](const std::string& m) { say(m); };
    AcceptanceSuite suite(hooks);
    const auto results = suite.run_all();
    selftest_failed_ = std::any_of(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    if (json_out()) {
      json doc = json::array();
      for (const auto& r : results) {
        doc.push_back(
            {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
      }
      return doc.dump(2) + '\n';
    }
    std::string out;
    for (const auto& r : results) out += format_result(r) + '\n';
    out += selftest_failed_ ? "selftest: FAILED\n" : "selftest: all criteria passed\n";
    return out;
  }

  const RunConfig& config_;
  std::ostream& err_;
  std::optional<PatternVector> pattern_;
  std::optional<PipelineResult> pipeline_;
  bool selftest_failed_ = false;
};

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw ArgumentError("cannot open " + config.out_path + " for writing");
  file << text;
  if (!file) throw ArgumentError("failed writing " + config.out_path);
}

int fail(const RunConfig& config, int code, const std::string& stage, const std::string& message,
         std::ostream& out, std::ostream& err) {
  err << "hka: " << stage << " error: " << message << '\n';
  if (config.error_json) {
    out << json{{"error", {{"stage", stage}, {"message", message}, {"exit_code", code}}}}.dump() << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Hankel determinants, automata and exponent bounds for +-1 product sequences", "hka"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--pattern", config.pattern_text, "sign pattern v, e.g. 1,1,-1,-1,1");
  app.add_option("--count", config.count, "number of Hankel determinants H_0..H_{count-1}")
      ->capture_default_str();
  app.add_option("--prefix-exp", config.prefix_exponent, "expand d^k terms of the fixed point (default: d^k <= 2^19)");
  app.add_option("--degree-max", config.degree_max, "initial monomial degree for relation mining")
      ->capture_default_str()
      ->check(CLI::Range(1u, 4u));
  app.add_option("--fit-end", config.fit_end, "relations are fitted on n < fit-end")->capture_default_str();
  app.add_option("--check-end", config.check_end, "and checked on fit-end <= n < check-end")->capture_default_str();
  app.add_option("--format", config.format, "text, json or dot")->capture_default_str();
  app.add_option("--reading", config.reading, "automaton digit order: lsd or msd")->capture_default_str();
  app.add_option("--assume-rho", config.assume_rho, "use this rho instead of the empirical estimate");
  app.add_option("--out", config.out_path, "write the artifact to this file");
  app.add_flag("--error-json", config.error_json, "print failures as JSON on standard output");
  app.add_flag("-q,--quiet", config.quiet, "no progress on standard error");

  const std::pair<const char*, const char*> commands[] = {
      {"hankel", "exact and mod-2 reduced Hankel determinants"},
      {"mine", "mined recurrences for X, Y, Z, U, V, W"},
      {"automaton", "minimal DFAO for the reduced Hankel determinants mod 2"},
      {"substitution", "uniform substitution and coding"},
      {"exponent", "irrationality exponent bounds"},
      {"report", "everything above in one document"},
      {"selftest", "run the acceptance suite"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&config, n = std::string(name)] { config.command = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }
  if (config.command != "selftest" && config.pattern_text.empty()) {
    return fail(config, kValidation, "validation", "--pattern is required", out, err);
  }

  try {
    Runner runner(config, err);
    emit(config, runner.execute(), out);
    return runner.selftest_failed() ? kSelftestFailed : kOk;
  } catch (const Error& e) {
    return fail(config, exit_code_for(e.stage()), to_string(e.stage()), e.what(), out, err);
  } catch (const std::exception& e) {
    return fail(config, kInternal, "internal", e.what(), out, err);
  }
}

}  // namespace hka::cli
