// Copyright 2026 The globent Authors
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

// globent: command-line front end.
//
//   globent measure (--state FILE | --zoo FAMILY [--param k=v]...) [--json]
//   globent tangle  (--state FILE | --zoo FAMILY ...) [--focus G] [--audit]
//   globent check   SUITE [--trials N] [--seed S]
//   globent zoo list

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "globent/checks.hpp"
#include "globent/mixed_bound.hpp"
#include "globent/pure_measure.hpp"
#include "globent/state_io.hpp"
#include "globent/state_zoo.hpp"
#include "globent/tangles.hpp"

namespace {

using globent::BoundOptions;
using globent::DensityMatrix;
using globent::PureState;
using globent::ZooState;
using nlohmann::json;

constexpr int kExitBadStateFile = 2;
constexpr int kExitBadZooSpec = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitPropertyFailure = 5;

// Thrown inside a command to leave with a specific exit code.
struct CommandExit {
  int code;
  std::string message;
};

struct SourceOptions {
  std::string state_path;
  std::string zoo;
  std::vector<std::string> params;
  bool renormalize = false;
};

struct CommonOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-7;
  bool json = false;
};

// Fixed four-decimal rendering without a "-0.0000".
std::string fixed4(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << (std::abs(x) < 5e-5 ? 0.0 : x);
  return os.str();
}

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  auto* state = cmd->add_option("--state", src.state_path, "state file (JSON)");
  auto* zoo = cmd->add_option("--zoo", src.zoo, "zoo family (see 'zoo list')");
  state->excludes(zoo);
  cmd->add_option("--param", src.params, "zoo parameter k=v (repeatable)")->take_all()->allow_extra_args(false);
  cmd->add_flag("--renormalize", src.renormalize, "rescale an off-norm state file instead of rejecting it");
}

void add_common_options(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--restarts", common.restarts, "optimizer restarts for mixed states")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", common.seed, "random seed (default 0)");
  cmd->add_option("--tol", common.tol, "optimizer stage tolerance")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", common.json, "emit a single JSON object");
}

BoundOptions bound_options(const CommonOptions& common) {
  BoundOptions opts;
  opts.restarts = common.restarts;
  opts.seed = common.seed;
  opts.tol = common.tol;
  return opts;
}

struct LoadedState {
  ZooState state;
  std::string source;
};

LoadedState load_state(const SourceOptions& src, const CommonOptions& common) {
  if (src.state_path.empty() && src.zoo.empty()) {
    throw CommandExit{kExitBadStateFile, "one of --state or --zoo is required"};
  }
  if (!src.state_path.empty()) {
    if (!src.params.empty()) throw CommandExit{kExitBadZooSpec, "--param applies only to --zoo"};
    try {
      return {globent::read_state_file(src.state_path, src.renormalize), src.state_path};
    } catch (const globent::StateFileError& e) {
      throw CommandExit{kExitBadStateFile, src.state_path + ": " + e.what()};
    }
  }
  globent::StateSpec spec;
  spec.family = src.zoo;
  spec.seed = common.seed;
  std::string source = "zoo " + src.zoo;
  for (const auto& kv : src.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CommandExit{kExitBadZooSpec, "--param expects k=v, got '" + kv + "'"};
    }
    spec.parameters[kv.substr(0, eq)] = kv.substr(eq + 1);
    source += " " + kv;
  }
  try {
    auto state = globent::make_zoo_state(spec);
    if (spec.family == "bound-abc" || spec.family == "bound_abc") {
      std::cerr << "bound-abc: rho = [2|GHZ><GHZ| + a|001><001| + b|010><010| + c|011><011|"
                   " + (1/c)|100><100| + (1/b)|101><101| + (1/a)|110><110|] / N,"
                   " N = 2+a+b+c+1/a+1/b+1/c (coefficient a on |001><001| so that Tr rho = 1)\n";
    }
    return {std::move(state), source};
  } catch (const globent::ZooError& e) {
    throw CommandExit{kExitBadZooSpec, e.what()};
  }
}

json dims_json(const globent::Dims& dims) { return dims.values(); }

json bound_json(const globent::BoundResult& r, const BoundOptions& opts) {
  return json{{"value", r.value},
              {"raw_objective", r.raw_objective},
              {"rank", r.rank},
              {"exact", r.exact},
              {"restarts", opts.restarts},
              {"restarts_used", r.restarts_used},
              {"converged", r.converged},
              {"seed", opts.seed},
              {"objective_trace", r.objective_trace}};
}

int cmd_measure(const SourceOptions& src, const CommonOptions& common) {
  const auto loaded = load_state(src, common);
  const auto opts = bound_options(common);
  std::ostringstream out;
  json doc{{"command", "measure"}, {"source", loaded.source}};

  if (const auto* psi = std::get_if<PureState>(&loaded.state)) {
    const auto report = globent::global_entanglement(*psi);
    const bool separable = globent::is_fully_separable(*psi);
    json parts = json::array();
    for (const auto& t : report.per_partition) {
      parts.push_back({{"partition", t.partition.label()},
                       {"squared_concurrence", t.squared_concurrence},
                       {"concurrence", std::sqrt(std::max(0.0, t.squared_concurrence))},
                       {"reduced_purity", t.reduced_purity}});
    }
    doc.update({{"dims", dims_json(psi->dims())},
                {"kind", "pure"},
                {"value", report.value()},
                {"value_vector_formula", report.value_vector_formula},
                {"value_purity_formula", report.value_purity_formula},
                {"num_bipartitions", report.num},
                {"fully_separable", separable},
                {"partitions", parts}});
    out << "source: " << loaded.source << "\n"
        << "dims: " << psi->dims().to_string() << "  kind: pure\n"
        << "value: " << fixed4(report.value()) << "\n"
        << "value (vector formula): " << fixed4(report.value_vector_formula) << "\n"
        << "value (purity formula): " << fixed4(report.value_purity_formula) << "\n"
        << "fully separable: " << (separable ? "yes" : "no") << "\n"
        << "bipartitions: " << report.num << "\n";
    std::size_t width = 9;
    for (const auto& t : report.per_partition) width = std::max(width, t.partition.label().size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "partition" << std::setw(10) << "C^2"
        << "Tr rho_L^2\n";
    for (const auto& t : report.per_partition) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << t.partition.label() << std::setw(10)
          << fixed4(t.squared_concurrence) << fixed4(t.reduced_purity) << "\n";
    }
  } else {
    const auto& rho = std::get<DensityMatrix>(loaded.state);
    const auto r = globent::global_lower_bound(rho, opts);
    doc.update({{"dims", dims_json(rho.dims())}, {"kind", "density"}});
    doc.update(bound_json(r, opts));
    out << "source: " << loaded.source << "\n"
        << "dims: " << rho.dims().to_string() << "  kind: density  rank: " << r.rank << "\n"
        << "value: " << fixed4(r.value) << (r.exact ? "  (exact)" : "  (lower bound)") << "\n"
        << "raw objective: " << fixed4(r.raw_objective) << "\n"
        << "restarts: " << r.restarts_used << "/" << opts.restarts << "  seed: " << opts.seed << "\n"
        << "converged: " << (r.converged ? "yes" : "no") << "\n";
  }
  std::cout << (common.json ? doc.dump() + "\n" : out.str());
  return 0;
}

json tangle_json(const globent::TangleReport& t) {
  json comps = json::array();
  for (const auto& c : t.components) {
    comps.push_back({{"name", c.name}, {"value", c.value}, {"exactness", globent::to_string(c.exactness)}});
  }
  json expansions = json::array();
  for (const auto& e : t.expansions) expansions.push_back(tangle_json(e));
  return json{{"focus", t.focus},
              {"lhs_label", t.lhs_label},
              {"lhs", t.lhs},
              {"lhs_exactness", globent::to_string(t.lhs_exactness)},
              {"components", comps},
              {"residual", t.residual},
              {"all_exact", t.all_exact()},
              {"expansions", expansions}};
}

void print_tangle(std::ostream& out, const globent::TangleReport& t, const std::string& indent = "") {
  out << indent << "grouping " << t.focus << "\n";
  std::size_t width = t.lhs_label.size();
  for (const auto& c : t.components) width = std::max(width, c.name.size());
  width = std::max<std::size_t>(width, 8) + 2;
  const auto row = [&](const std::string& name, double v, const char* flag) {
    out << indent << "  " << std::left << std::setw(static_cast<int>(width)) << name << std::setw(10)
        << fixed4(v) << flag << "\n";
  };
  row(t.lhs_label, t.lhs, globent::to_string(t.lhs_exactness));
  for (const auto& c : t.components) row(c.name, c.value, globent::to_string(c.exactness));
  row("residual", t.residual, t.all_exact() ? "exact" : "upper estimate");
  for (const auto& e : t.expansions) print_tangle(out, e, indent + "    ");
}

// Accepts "A", "B", "C" or a full label such as "A(BC)".
std::optional<int> three_party_focus(const std::string& focus) {
  if (focus.empty()) return 0;
  for (int i = 0; i < 3; ++i) {
    const char letter = globent::subsystem_letter(i);
    if (focus.size() == 1 && (focus[0] == letter || focus[0] == letter + ('a' - 'A'))) return i;
    if (focus.size() > 1 && focus[0] == letter && focus[1] == '(') return i;
  }
  return std::nullopt;
}

int cmd_tangle(const SourceOptions& src, const CommonOptions& common, const std::string& focus,
               bool audit) {
  const auto loaded = load_state(src, common);
  const auto opts = bound_options(common);
  const auto& dims =
      std::visit([](const auto& s) -> const globent::Dims& { return s.dims(); }, loaded.state);
  const auto all_qubits = [&] {
    for (int d : dims.values()) {
      if (d != 2) return false;
    }
    return true;
  }();
  json doc{{"command", "tangle"}, {"source", loaded.source}, {"dims", dims_json(dims)}};
  std::ostringstream out;
  out << "source: " << loaded.source << "\n";

  if (dims.size() == 3 && all_qubits) {
    if (audit) throw CommandExit{kExitUnsupported, "--audit requires a four-qubit pure state"};
    const auto f = three_party_focus(focus);
    if (!f) throw CommandExit{kExitUnsupported, "unknown grouping '" + focus + "' for three parties"};
    const auto report = std::holds_alternative<PureState>(loaded.state)
                            ? globent::three_tangle(std::get<PureState>(loaded.state), *f)
                            : globent::tangle_mixed_focus(std::get<DensityMatrix>(loaded.state), *f, opts);
    doc["groupings"] = json::array({tangle_json(report)});
    print_tangle(out, report);
  } else if (dims.size() == 4 && all_qubits && std::holds_alternative<PureState>(loaded.state)) {
    const auto result = globent::four_partite_audit(std::get<PureState>(loaded.state), opts);
    json groups = json::array();
    bool matched = false;
    for (const auto& g : result.groupings) {
      if (!audit && !focus.empty() && g.focus != focus) continue;
      matched = true;
      groups.push_back(tangle_json(g));
      print_tangle(out, g);
    }
    if (!matched) throw CommandExit{kExitUnsupported, "unknown grouping '" + focus + "' for four parties"};
    doc["groupings"] = groups;
    doc["complementary_defect"] = result.complementary_defect;
    out << "groupings listed: " << groups.size() << "\n"
        << "complementary cut defect: " << fixed4(result.complementary_defect) << "\n";
  } else {
    throw CommandExit{kExitUnsupported,
                      "tangle supports three-qubit states and four-qubit pure states, got dims " +
                          dims.to_string() + (dims.size() == 4 ? " (mixed)" : "")};
  }
  std::cout << (common.json ? doc.dump() + "\n" : out.str());
  return 0;
}

int cmd_check(const std::string& suite, int trials, std::uint64_t seed, bool as_json) {
  const auto results = globent::checks::run_suite(suite, trials, seed);
  bool all = true;
  json rows = json::array();
  std::ostringstream out;
  std::size_t width = 8;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    all = all && r.passed;
    rows.push_back({{"name", r.name},
                    {"passed", r.passed},
                    {"trials", r.trials},
                    {"worst", r.worst},
                    {"comparison", r.comparison},
                    {"threshold", r.threshold},
                    {"detail", r.detail}});
    std::ostringstream stat;
    stat << std::scientific << std::setprecision(3) << r.worst << " " << r.comparison << " " << r.threshold;
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2) << r.name
        << "trials " << std::setw(5) << r.trials << stat.str();
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
  }
  out << (all ? "all properties hold\n" : "property failure\n");
  json doc{{"command", "check"}, {"suite", suite}, {"seed", seed}, {"trials", trials},
           {"passed", all}, {"results", rows}};
  std::cout << (as_json ? doc.dump() + "\n" : out.str());
  return all ? 0 : kExitPropertyFailure;
}

int cmd_zoo_list(bool as_json) {
  json rows = json::array();
  std::ostringstream out;
  for (const auto& f : globent::zoo_families()) {
    rows.push_back({{"name", f.name}, {"parameters", f.parameters}, {"description", f.description}});
    out << std::left << std::setw(16) << f.name << std::setw(36) << f.parameters << f.description << "\n";
  }
  std::cout << (as_json ? json{{"families", rows}}.dump() + "\n" : out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"globent: global entanglement of multipartite states"};
  app.require_subcommand(1);

  SourceOptions src;
  CommonOptions common;

  auto* measure = app.add_subcommand("measure", "global entanglement (pure) or its lower bound (mixed)");
  add_source_options(measure, src);
  add_common_options(measure, common);

  std::string focus;
  bool audit = false;
  auto* tangle = app.add_subcommand("tangle", "tangle decomposition for three or four qubits");
  add_source_options(tangle, src);
  add_common_options(tangle, common);
  tangle->add_option("--focus", focus, "grouping, e.g. A, B(AC) or (AB)CD");
  tangle->add_flag("--audit", audit, "list all ten four-party groupings");

  std::string suite;
  int trials = 200;
  auto* check = app.add_subcommand("check", "randomized property suites");
  check->add_option("suite", suite, "equivalence | lu | monotone | partitions | all")
      ->required()
      ->check(CLI::IsMember({"equivalence", "lu", "monotone", "partitions", "all"}));
  check->add_option("--trials", trials, "trials per suite")->check(CLI::PositiveNumber);
  check->add_option("--seed", common.seed, "random seed (default 0)");
  check->add_flag("--json", common.json, "emit a single JSON object");

  auto* zoo = app.add_subcommand("zoo", "state families");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "list families and parameters");
  zoo_list->add_flag("--json", common.json, "emit a single JSON object");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*measure) return cmd_measure(src, common);
    if (*tangle) return cmd_tangle(src, common, focus, audit);
    if (*check) return cmd_check(suite, trials, common.seed, common.json);
    if (*zoo_list) return cmd_zoo_list(common.json);
  } catch (const CommandExit& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
