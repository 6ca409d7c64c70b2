/*
 * Copyright 2026 The monoclique Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */


#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "monoclique/circuit.hpp"
#include "monoclique/clique.hpp"
#include "monoclique/dnf.hpp"
#include "monoclique/netlist.hpp"
#include "monoclique/passes.hpp"
#include "monoclique/report.hpp"
#include "monoclique/verify.hpp"

namespace monoclique::cli {
namespace {

// Usage or I/O problem; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

Circuit load_circuit(const std::string& path, std::istream& in) {
  Circuit c = parse_netlist(read_source(path, in));
  require_valid(c);
  return c;
}

Mode parse_mode(const std::string& text) {
  if (text == "circuit") return Mode::Circuit;
  if (text == "dnf") return Mode::Dnf;
  throw UsageError("mode must be 'circuit' or 'dnf', got '" + text + "'");
}

std::vector<VarIndex> parse_pivots(const std::string& text) {
  std::vector<VarIndex> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<VarIndex>(v));
    } catch (const std::exception&) {
      throw UsageError("bad pivot list '" + text + "'");
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected A..B");
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return kExitOk;
    case Verdict::Inequivalent:
      return kExitRefuted;
    case Verdict::BudgetExceeded:
      return kExitBudget;
  }
  return kExitUsage;
}

struct Options {
  std::size_t guard = kDefaultGuard;
  std::size_t budget = kDefaultDnfBudget;
  unsigned threads = 1;

  std::string file;
  std::string file_b;
  std::string input;
  std::string mode = "circuit";
  std::string kind = "monotone";
  std::string pivots;
  std::string m_range;
  std::string rewrites = "all";
  std::size_t m = 0;
  std::size_t s = 0;
  VarIndex var = 0;
  std::size_t trials = 100;
  std::size_t depth = 3;
  std::uint64_t seed = 1;
};

int dispatch(const std::string& cmd, const Options& o, std::istream& in, std::ostream& out) {
  TheoremConfig config;
  config.sweep.guard = o.guard;
  config.sweep.threads = o.threads;
  config.dnf_budget = o.budget;

  if (cmd == "parse") {
    out << serialize_netlist(load_circuit(o.file, in));
    return kExitOk;
  }
  if (cmd == "eval") {
    const Circuit c = load_circuit(o.file, in);
    out << (eval(c, Assignment::from_string(o.input)) ? 1 : 0) << '\n';
    return kExitOk;
  }
  if (cmd == "standardize") {
    out << serialize_netlist(standardize(load_circuit(o.file, in)));
    return kExitOk;
  }
  if (cmd == "fold") {
    out << serialize_netlist(constant_fold(load_circuit(o.file, in)));
    return kExitOk;
  }
  if (cmd == "dnf") {
    out << format_dnf(to_dnf(load_circuit(o.file, in), {o.budget}));
    return kExitOk;
  }
  if (cmd == "substitute") {
    out << serialize_netlist(substitute_literal(load_circuit(o.file, in), o.var));
    return kExitOk;
  }
  if (cmd == "monotonize") {
    const Circuit c = load_circuit(o.file, in);
    if (parse_mode(o.mode) == Mode::Circuit) {
      out << serialize_netlist(monotonize_circuit_level(c));
    } else {
      out << serialize_netlist(to_circuit(monotonize_dnf(to_dnf(c, {o.budget}))));
    }
    return kExitOk;
  }
  if (cmd == "gen") {
    const CliqueSpec spec(o.m, o.s);
    if (o.kind == "monotone") {
      out << serialize_netlist(build_monotone_dnf_circuit(spec));
    } else if (o.kind == "shannon") {
      out << serialize_netlist(build_shannon_circuit(spec, parse_pivots(o.pivots)));
    } else if (o.kind == "pon") {
      out << serialize_netlist(build_pon_circuit(spec));
    } else {
      throw UsageError("kind must be monotone, shannon or pon");
    }
    return kExitOk;
  }
  if (cmd == "oracle") {
    out << (clique_oracle(CliqueSpec(o.m, o.s), Assignment::from_string(o.input)) ? 1 : 0)
        << '\n';
    return kExitOk;
  }
  if (cmd == "equiv") {
    const Circuit a = load_circuit(o.file, in);
    const Circuit b = load_circuit(o.file_b, in);
    if (a.num_vars() != b.num_vars()) throw UsageError("circuits have different input counts");
    const auto r = equiv_exhaustive(Evaluatable::of(a), Evaluatable::of(b), config.sweep);
    out << format_header(o.guard, o.budget) << format_equivalence_report(r);
    return verdict_exit(r.verdict());
  }
  if (cmd == "check-theorem1" || cmd == "check-theorem2") {
    const Circuit c = load_circuit(o.file, in);
    const CliqueSpec spec(o.m, o.s);
    const TheoremReport r = cmd == "check-theorem1"
                                ? check_theorem1(c, spec, o.var, parse_mode(o.mode), config)
                                : check_theorem2(c, spec, parse_mode(o.mode), config);
    out << format_header(o.guard, o.budget) << format_theorem_report(r);
    return verdict_exit(r.verdict);
  }
  if (cmd == "search") {
    SearchOptions so;
    so.depth = o.depth;
    so.trials = o.trials;
    so.seed = o.seed;
    so.rewrites = parse_rewrites(o.rewrites);
    so.config = config;
    const SearchResult r = search_counterexample(CliqueSpec(o.m, o.s), so);
    out << format_header(o.guard, o.budget) << format_search_result(r, so);
    return r.failures.empty() ? kExitOk : kExitRefuted;
  }
  if (cmd == "blowup") {
    const auto [lo, hi] = parse_range(o.m_range);
    std::vector<std::size_t> counts;
    for (VarIndex k : parse_pivots(o.pivots.empty() ? "0,1,2" : o.pivots)) counts.push_back(k);
    const auto rows = blowup_report(lo, hi, o.s, counts, o.budget);
    out << "# monoclique budget=" << o.budget << '\n' << format_blowup_csv(rows);
    return kExitOk;
  }
  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("MONOCLIQUE_GUARD")) {
    try {
      o.guard = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: MONOCLIQUE_GUARD must be an integer\n";
      return kExitUsage;
    }
  }
  o.threads = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Clique circuit transforms and exhaustive verification", "monoclique"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--guard", o.guard, "Largest variable count for exhaustive sweeps")
      ->check(CLI::Range(std::size_t{0}, kMaxGuard));
  app.add_option("--budget", o.budget, "DNF monomial budget");
  app.add_option("--threads", o.threads, "Worker threads for exhaustive sweeps")
      ->check(CLI::PositiveNumber);

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Netlist file, '-' for stdin")->required();
  };
  auto spec_args = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "Vertex count")->required();
    sub->add_option("--s", o.s, "Clique size")->required();
  };
  auto mode_arg = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "circuit or dnf")->required();
  };

  file_arg(app.add_subcommand("parse", "Validate and echo canonical netlist"));
  {
    auto* sub = app.add_subcommand("eval", "Evaluate a circuit on one assignment");
    file_arg(sub);
    sub->add_option("--input", o.input, "Assignment bits, x1 first")->required();
  }
  file_arg(app.add_subcommand("standardize", "Push NOT gates to the inputs"));
  file_arg(app.add_subcommand("fold", "Constant folding"));
  file_arg(app.add_subcommand("dnf", "Expand to absorbed DNF"));
  {
    auto* sub = app.add_subcommand("substitute", "Replace ~x_{K+1} by constant 1");
    file_arg(sub);
    sub->add_option("--var", o.var, "0-based variable index")->required();
  }
  {
    auto* sub = app.add_subcommand("monotonize", "Replace every negated input by 1");
    file_arg(sub);
    mode_arg(sub);
  }
  {
    auto* sub = app.add_subcommand("gen", "Generate a CLIQUE(m,s) circuit");
    sub->add_option("--kind", o.kind, "monotone, shannon or pon")->required();
    spec_args(sub);
    sub->add_option("--pivots", o.pivots, "Comma-separated pivot variables (shannon)");
  }
  {
    auto* sub = app.add_subcommand("oracle", "Evaluate CLIQUE(m,s) by subset enumeration");
    spec_args(sub);
    sub->add_option("--input", o.input, "Edge bits in lexicographic edge order")->required();
  }
  {
    auto* sub = app.add_subcommand("equiv", "Exhaustive equivalence of two circuits");
    sub->add_option("file", o.file, "First netlist")->required();
    sub->add_option("file_b", o.file_b, "Second netlist")->required();
  }
  {
    auto* sub = app.add_subcommand("check-theorem1", "Single negated-input substitution");
    file_arg(sub);
    spec_args(sub);
    sub->add_option("--var", o.var, "0-based variable index")->required();
    mode_arg(sub);
  }
  {
    auto* sub = app.add_subcommand("check-theorem2", "Substitute all negated inputs");
    file_arg(sub);
    spec_args(sub);
    mode_arg(sub);
  }
  {
    auto* sub = app.add_subcommand("search", "Random rewrites in search of substitution failures");
    spec_args(sub);
    sub->add_option("--trials", o.trials, "Trial count");
    sub->add_option("--seed", o.seed, "Search seed");
    sub->add_option("--depth", o.depth, "Rewrites per trial");
    sub->add_option("--rewrites", o.rewrites, "Subset of dn,shannon,swap,contra or all");
  }
  {
    auto* sub = app.add_subcommand("blowup", "Size table for Shannon clique circuits");
    sub->add_option("--m-range", o.m_range, "Vertex range A..B")->required();
    sub->add_option("--s", o.s, "Clique size")->required();
    sub->add_option("--pivots", o.pivots, "Pivot counts, default 0,1,2");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, in, out);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const DnfBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return cmd == "parse" ? kExitRefuted : kExitUsage;
  } catch (const CircuitError& e) {
    err << "error: " << e.what() << '\n';
    return cmd == "parse" ? kExitRefuted : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace monoclique::cli
