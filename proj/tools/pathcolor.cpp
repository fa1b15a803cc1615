// Copyright 2026 The pathcolor Authors
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

// pathcolor: exact analysis and simulation of one-round coloring protocols on
// path networks.
//
//   pathcolor verify   --n-max 8 --c-max 3
//   pathcolor simulate --n 50 --c 2..40 --protocols random,C|phi,phi|C,Cbar|CbarX
//   pathcolor symmetry --path 4 --r 1 --c 2
//
// Exit codes: 0 success, 1 verification mismatch, 2 budget or usage error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pathcolor/analytics.hpp"
#include "pathcolor/graph.hpp"
#include "pathcolor/montecarlo.hpp"
#include "pathcolor/oracle.hpp"
#include "pathcolor/protocols.hpp"
#include "pathcolor/symmetry.hpp"
#include "pathcolor/verify.hpp"

namespace {

using namespace pathcolor;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PATHCOLOR_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("PATHCOLOR_BUDGET='{}' is not an integer", env));
    }
  }
  return EnumerationBudget::kDefaultMaxWork;
}

// "5", "2..40" or "2,4,8".
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const std::int64_t lo = std::stoll(text.substr(0, dots));
      const std::int64_t hi = std::stoll(text.substr(dots + 2));
      if (hi < lo) throw UsageError(fmt::format("empty range '{}'", text));
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  } catch (const std::logic_error&) {
    throw UsageError(fmt::format("cannot parse '{}' as a number list", text));
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

std::vector<ProtocolSpec> parse_protocol_list(const std::string& text) {
  std::vector<ProtocolSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all32") {
      const auto all = enumerate_protocols();
      out.insert(out.end(), all.begin(), all.end());
      continue;
    }
    try {
      out.push_back(parse_protocol(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("no protocols given");
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError(fmt::format("cannot open '{}' for writing", path));
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_header(std::ostream& out, const std::string& subcommand, const std::string& config,
                  bool timestamp) {
  fmt::print(out, "# pathcolor {}\n# config: {}\n", subcommand, config);
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    fmt::print(out, "# generated: {}\n", buf);
  }
}

struct VerifyArgs {
  std::string theorem = "all";
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> c;
  std::int64_t n_min = 2;
  std::int64_t n_max = 8;
  std::int64_t c_max = 3;
  std::uint64_t budget = 0;
  unsigned workers = 0;
  std::string out;
  bool no_timestamp = false;
};

int cmd_verify(const VerifyArgs& args) {
  VerifyConfig config;
  if (args.theorem != "all") {
    config.theorems.clear();
    for (auto t : parse_int_list(args.theorem)) config.theorems.push_back(static_cast<int>(t));
  }
  config.n_min = args.n.value_or(args.n_min);
  config.n_max = args.n.value_or(args.n_max);
  config.c_min = args.c.value_or(2);
  config.c_max = args.c.value_or(args.c_max);
  config.oracle = {{args.budget}, args.workers};

  VerifySummary summary;
  try {
    summary = run_verify(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Output out(args.out);
  write_header(out.stream(), "verify",
               fmt::format("checks={} n={}..{} c={}..{} budget={}", fmt::join(config.theorems, ","),
                           config.n_min, config.n_max, config.c_min, config.c_max, args.budget),
               !args.no_timestamp);
  write_verify_csv(out.stream(), summary.rows);

  if (summary.center_checked) {
    if (summary.matching_center_variants.empty()) {
      std::cerr << "check 5: no formula variant matches the oracle\n";
    } else {
      std::vector<std::string_view> names;
      for (auto v : summary.matching_center_variants) names.push_back(variant_name(v));
      std::cerr << fmt::format("check 5: matching variant(s): {}\n", fmt::join(names, ", "));
    }
  }
  if (!summary.ok) {
    const auto& f = *summary.first_failure;
    std::cerr << fmt::format("mismatch: check {} n={} c={} d={}: closed form {} vs oracle {}\n", f.theorem,
                             f.n, f.c, f.d, f.closed_form, f.oracle);
    return kExitMismatch;
  }
  std::cerr << fmt::format("verify: {} cells match\n", summary.rows.size());
  return kExitOk;
}

struct SimulateArgs {
  std::int64_t n = 50;
  std::string colors = "2..40";
  std::string protocols = "random,C|phi,phi|C,Cbar|CbarX";
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 7;
  std::string baseline = "exact";
  std::string mode = "auto";
  std::uint64_t budget = 0;
  unsigned workers = 0;
  std::string out;
  bool no_timestamp = false;
};

int cmd_simulate(const SimulateArgs& args) {
  CurveConfig config;
  config.n = args.n;
  config.colors = parse_int_list(args.colors);
  config.protocols = parse_protocol_list(args.protocols);
  config.trials = args.trials;
  config.seed = args.seed;
  config.workers = args.workers;
  config.baseline = args.baseline == "sampled" ? Baseline::kSampled : Baseline::kExact;
  if (args.mode == "auto") {
    config.exact_budget = EnumerationBudget{args.budget};
  } else if (args.mode == "exact") {
    config.exact_budget = EnumerationBudget{UINT64_MAX};
    for (const auto c : config.colors) {
      for (const auto spec : config.protocols) {
        const auto work = protocol_enumeration_work(config.n, c, spec);
        if (work > args.budget) throw BudgetExceeded(work, args.budget);
      }
    }
  }

  std::vector<CurveRow> rows;
  try {
    rows = curve_dataset(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output out(args.out);
  write_header(out.stream(), "simulate",
               fmt::format("n={} c={} protocols={} trials={} seed={} baseline={} mode={} budget={}", args.n,
                           args.colors, args.protocols, args.trials, args.seed, args.baseline, args.mode,
                           args.budget),
               !args.no_timestamp);
  write_curve_csv(out.stream(), rows);
  return kExitOk;
}

struct SymmetryArgs {
  std::optional<std::size_t> path;
  std::string graph_file;
  std::size_t r = 1;
  std::int64_t c = 2;
  std::string out;
  bool no_timestamp = false;
};

std::string layer_text(const std::vector<NodeType>& types) {
  std::vector<std::string> parts;
  for (const auto& t : types) parts.push_back(to_string(t));
  return fmt::format("[{}]", fmt::join(parts, "; "));
}

int cmd_symmetry(const SymmetryArgs& args) {
  if (args.path.has_value() == !args.graph_file.empty()) {
    throw UsageError("give exactly one of --path or --graph");
  }
  if (args.c < 2) throw UsageError("--c must be at least 2");
  std::optional<FlowGraph> graph;
  try {
    if (args.path) {
      graph = build_path(*args.path);
    } else {
      std::ifstream in(args.graph_file);
      if (!in) throw UsageError(fmt::format("cannot read '{}'", args.graph_file));
      graph = parse_graph(in);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FlowGraph& g = *graph;

  std::optional<SymmetricPair> pair;
  try {
    pair = find_symmetric_pair(g, args.r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Output out_file(args.out);
  auto& out = out_file.stream();
  write_header(out, "symmetry",
               fmt::format("{} r={} c={}", args.path ? fmt::format("path={}", *args.path) : "graph=" + args.graph_file,
                           args.r, args.c),
               !args.no_timestamp);
  fmt::print(out, "nodes: {}  edges: {}  diameter: {}\n", g.node_count(), g.edge_count(), diameter(g));
  fmt::print(out, "note: radii are gated on R < dia(G); R = dia(G) is rejected as well\n");
  if (!pair) {
    fmt::print(out, "no {}-hop symmetric pair\n", args.r);
    return kExitOk;
  }
  fmt::print(out, "symmetric pair: ({}, {})  radius: {}\n", pair->i + 1, pair->j + 1, pair->radius);
  for (std::size_t r = 0; r < pair->layer_witness.size(); ++r) {
    fmt::print(out, "  r={}: {} | {}\n", r + 1, layer_text(pair->layer_witness[r].first),
               layer_text(pair->layer_witness[r].second));
  }
  const auto state = adversarial_state(g, *pair, static_cast<Color>(args.c));
  fmt::print(out, "adversarial state: ({})\n", format_state(state));

  if (!g.is_labelled_path()) {
    const auto trees = run_rounds(g, state, pair->radius);
    fmt::print(out, "views equal at radius {}: {}\n", pair->radius,
               anonymize(trees[pair->i]) == anonymize(trees[pair->j]) ? "yes" : "no");
    fmt::print(out, "protocol table skipped: the one-round protocol family is defined on paths\n");
    return kExitOk;
  }

  const auto report = impossibility_check(g, *pair, static_cast<Color>(args.c));
  fmt::print(out, "one-round views equal: {}  radius views equal: {}\n", report.one_round_views_equal ? "yes" : "no",
             report.radius_views_equal ? "yes" : "no");
  fmt::print(out, "{:<4} {:<14} {:<12} {:<8} {:<8} {:>18} {:>18}\n", "mask", "alias", "protocol", "dec_i",
             "dec_j", "P(defect on i-j)", "E[defects]");
  std::size_t defective = 0;
  for (const auto& row : report.rows) {
    const auto dec = [](Decision d) { return d == Decision::kRedraw ? "redraw" : "keep"; };
    fmt::print(out, "{:<4} {:<14} {:<12} {:<8} {:<8} {:>18} {:>18}\n", row.protocol.mask(), row.protocol.alias(),
               row.protocol.name(), dec(row.decision_i), dec(row.decision_j), to_string(row.pair_defect_probability),
               to_string(row.expected_defects));
    defective += row.pair_defect_probability > 0;
  }
  fmt::print(out, "{}/{} protocols defective on the adversarial state\n", defective, report.rows.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis and simulation of one-round coloring protocols on path networks"};
  app.require_subcommand(1);

  std::uint64_t budget = 0;
  try {
    budget = default_budget();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  VerifyArgs verify;
  verify.budget = budget;
  auto* v = app.add_subcommand("verify", "Compare closed-form defect distributions with exhaustive enumeration");
  v->add_option("--theorem", verify.theorem, "Checks to run: all, or a list from 2 (random), 3 (group counts), 4 (edge correcting), 5 (center correcting)");
  v->add_option("--n", verify.n, "Single path length");
  v->add_option("--n-min", verify.n_min, "Smallest path length");
  v->add_option("--n-max", verify.n_max, "Largest path length");
  v->add_option("--c", verify.c, "Single palette size");
  v->add_option("--c-max", verify.c_max, "Largest palette size (smallest is 2)");
  v->add_option("--budget", verify.budget, "Max state evaluations per enumeration (env PATHCOLOR_BUDGET)");
  v->add_option("--workers", verify.workers, "Worker threads, 0 = all cores");
  v->add_option("--out", verify.out, "Output file (default stdout)");
  v->add_flag("--no-timestamp", verify.no_timestamp, "Omit the generated-at header line");

  SimulateArgs simulate;
  simulate.budget = budget;
  auto* s = app.add_subcommand("simulate", "Average defects per protocol and palette size");
  s->add_option("--n", simulate.n, "Path length");
  s->add_option("--c", simulate.colors, "Palette sizes: 5, 2..40 or 2,4,8");
  s->add_option("--protocols", simulate.protocols, "Comma list of aliases (random, C|phi, ...), masks, or all32");
  s->add_option("--trials", simulate.trials, "Monte-Carlo trials per cell");
  s->add_option("--seed", simulate.seed, "Seed");
  s->add_option("--baseline", simulate.baseline, "Normalization baseline")->check(CLI::IsMember({"exact", "sampled"}));
  s->add_option("--mode", simulate.mode, "auto: enumerate when within budget; exact; mc")
      ->check(CLI::IsMember({"auto", "exact", "mc"}));
  s->add_option("--budget", simulate.budget, "Max state evaluations for exact cells (env PATHCOLOR_BUDGET)");
  s->add_option("--workers", simulate.workers, "Worker threads, 0 = all cores");
  s->add_option("--out", simulate.out, "Output file (default stdout)");
  s->add_flag("--no-timestamp", simulate.no_timestamp, "Omit the generated-at header line");

  SymmetryArgs symmetry;
  auto* y = app.add_subcommand("symmetry", "Find an R-hop symmetric pair and defeat every one-round protocol");
  y->add_option("--path", symmetry.path, "Use P_n");
  y->add_option("--graph", symmetry.graph_file, "Graph file ('n <count>' then 'e <i> <j>' lines)");
  y->add_option("--r", symmetry.r, "Symmetry radius R");
  y->add_option("--c", symmetry.c, "Palette size");
  y->add_option("--out", symmetry.out, "Output file (default stdout)");
  y->add_flag("--no-timestamp", symmetry.no_timestamp, "Omit the generated-at header line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*v) return cmd_verify(verify);
    if (*s) return cmd_simulate(simulate);
    if (*y) return cmd_symmetry(symmetry);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
