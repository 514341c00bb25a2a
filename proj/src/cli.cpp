// Copyright 2026 The ccpbisim Authors
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

#include "ccpbisim/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccpbisim/bench.hpp"
#include "ccpbisim/derivation.hpp"
#include "ccpbisim/dot.hpp"
#include "ccpbisim/error.hpp"
#include "ccpbisim/oracle.hpp"
#include "ccpbisim/parser.hpp"
#include "ccpbisim/refinement.hpp"

namespace ccpbisim {

namespace {

struct Options {
  std::string file;
  std::size_t max_states = kDefaultStateBound;
  std::string oracle;
  bool dot = false;
  bool trace = false;
  bool parallel = false;
  bool timing = false;
  std::string mode = "labeled";
  std::vector<int> ns{2, 4, 6, 8};
  std::string jsonl;
};

int exit_code_for(const Error& e) {
  return is_resource_error(e.kind()) ? kExitResourceError : kExitProgramError;
}

std::string describe(const Error& e) {
  return "error: " + std::string(to_string(e.kind())) + ": " + e.what();
}

std::string read_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::invalid_parameter, "cannot read '" + path + "'");
  }
  buf << in.rdbuf();
  return buf.str();
}

std::string format_partition(const Partition& part, const StateSpace& space,
                             const ConstraintSystem& sys) {
  std::string out;
  for (const auto& block : part.blocks()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ", ";
      out += to_string(space.states[block[k]], sys);
    }
    out += '}';
  }
  return out;
}

void print_trace(std::ostream& out, const RefinementResult& r,
                 const ConstraintSystem& sys) {
  const auto& ps = r.trace.partitions;
  for (std::size_t n = 0; n < ps.size(); ++n) {
    out << "P" << n << " (" << ps[n].block_count()
        << " blocks): " << format_partition(ps[n], r.space, sys) << "\n";
  }
  if (ps.size() >= 2) {
    out << "fixpoint: P" << ps.size() - 1 << " = P" << ps.size() - 2 << "\n";
  }
}

void print_space(std::ostream& out, const StateSpace& space,
                 const ConstraintSystem& sys) {
  std::size_t derived_states =
      std::count(space.derived.begin(), space.derived.end(), true);
  out << "states: " << space.size() << "\n";
  out << "transitions: " << space.edge_count() << "\n";
  if (space.derived_edge_count() || derived_states) {
    out << "derived states: " << derived_states << "\n";
    out << "derived transitions: " << space.derived_edge_count() << "\n";
  }
  for (std::size_t s = 0; s < space.size(); ++s) {
    out << "s" << s << " " << to_string(space.states[s], sys);
    if (std::find(space.initials.begin(), space.initials.end(), s) !=
        space.initials.end()) {
      out << " initial";
    }
    if (space.derived[s]) out << " derived";
    out << "\n";
  }
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (const auto& e : space.edges[s]) {
      out << "s" << s << " --" << sys.to_string(e.label) << "--> s" << e.target
          << "\n";
    }
  }
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (const auto& e : space.derived_edges[s]) {
      out << "s" << s << " --" << sys.to_string(e.label) << "--> s" << e.target
          << " derived\n";
    }
  }
}

struct QueryOutcome {
  std::string text;
  std::string error;
  int status = kExitOk;
};

QueryOutcome answer(const Program& prog, const Query& q, std::size_t index,
                    const Options& opt) {
  const auto& sys = prog.system;
  QueryOutcome res;
  std::ostringstream out;
  out << "query " << index + 1 << " at line " << q.line << ": " << to_string(q.kind)
      << " " << to_string(q.lhs, sys) << " ~ " << to_string(q.rhs, sys) << "\n";
  try {
    Context ctx(prog);
    auto start = std::chrono::steady_clock::now();
    std::string method = opt.oracle.empty() ? "" : opt.oracle;
    if (method.empty() && q.kind != QueryKind::sb) method = to_string(q.kind);
    bool verdict = false;
    std::optional<RefinementResult> refined;
    if (method.empty()) {
      refined = ccp_partition_refine({q.lhs, q.rhs}, ctx, opt.max_states);
      verdict = refined->partition.same_block(*refined->space.find(q.lhs),
                                              *refined->space.find(q.rhs));
    } else if (method == "sb") {
      verdict = sb_oracle(q.lhs, q.rhs, ctx, opt.max_states);
    } else if (method == "barbed") {
      verdict = barbed_bisim(q.lhs, q.rhs, ctx, opt.max_states);
    } else if (method == "syntactic") {
      verdict = syntactic_bisim(q.lhs, q.rhs, ctx, opt.max_states);
    } else {
      verdict = irredundant_gfp(q.lhs, q.rhs, ctx, opt.max_states);
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    out << "  verdict: " << (verdict ? "equivalent" : "inequivalent") << "\n";
    if (refined) {
      out << "  method: partition-refinement\n";
      out << "  closure states: " << refined->space.size() << "\n";
      out << "  iterations: " << refined->iterations() << "\n";
      out << "  blocks: " << refined->partition.block_of(*refined->space.find(q.lhs))
          << ", " << refined->partition.block_of(*refined->space.find(q.rhs))
          << "\n";
      if (opt.trace) {
        std::ostringstream t;
        print_trace(t, *refined, sys);
        std::istringstream lines(t.str());
        for (std::string line; std::getline(lines, line);) {
          out << "  " << line << "\n";
        }
      }
    } else {
      out << "  method: oracle " << method << "\n";
    }
    if (opt.timing) {
      out << "  wall time: " << std::fixed << std::setprecision(6) << secs
          << " s\n";
    }
  } catch (const Error& e) {
    res.error = "query " + std::to_string(index + 1) + " at line " +
                std::to_string(q.line) + ": " + describe(e);
    res.status = exit_code_for(e);
  }
  res.text = out.str();
  return res;
}

int cmd_check(const Program& prog, const Options& opt, std::ostream& out,
              std::ostream& err) {
  std::vector<QueryOutcome> results(prog.queries.size());
  if (opt.parallel) {
    std::vector<std::future<QueryOutcome>> jobs;
    for (std::size_t i = 0; i < prog.queries.size(); ++i) {
      jobs.push_back(std::async(std::launch::async, answer, std::cref(prog),
                                std::cref(prog.queries[i]), i, std::cref(opt)));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < prog.queries.size(); ++i) {
      results[i] = answer(prog, prog.queries[i], i, opt);
    }
  }
  int status = kExitOk;
  for (const auto& r : results) {
    out << r.text;
    if (!r.error.empty()) err << r.error << "\n";
    status = std::max(status, r.status);
  }
  return status;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  auto reports = run_bench(opt.ns, opt.max_states);
  out << std::left << std::setw(4) << "n" << std::right << std::setw(10)
      << "states" << std::setw(10) << "edges" << std::setw(10) << "closure"
      << std::setw(10) << "ratio" << std::setw(8) << "iters" << std::setw(14)
      << "leq calls";
  if (opt.timing) out << std::setw(12) << "time (s)";
  out << "\n";
  int status = kExitOk;
  for (const auto& r : reports) {
    out << std::left << std::setw(4) << r.n << std::right;
    if (r.error) {
      out << "  " << *r.error << "\n";
      int code = r.error_kind && is_resource_error(*r.error_kind)
                     ? kExitResourceError
                     : kExitProgramError;
      status = std::max(status, code);
      continue;
    }
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(3) << r.ratio();
    out << std::setw(10) << r.config_states << std::setw(10)
        << r.config_transitions << std::setw(10) << r.closure_states
        << std::setw(10) << ratio.str() << std::setw(8) << r.iterations
        << std::setw(14) << r.leq_calls;
    if (opt.timing) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(4) << r.wall_time;
      out << std::setw(12) << t.str();
    }
    out << "\n";
  }
  if (!opt.jsonl.empty()) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (opt.jsonl != "-") {
      file.open(opt.jsonl);
      if (!file) {
        err << "error: cannot write '" << opt.jsonl << "'\n";
        return kExitProgramError;
      }
      sink = &file;
    }
    for (const auto& r : reports) *sink << to_json(r, opt.timing) << "\n";
  }
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Saturated barbed bisimilarity checker for ccp programs",
               "ccpbisim"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "program file, or - for stdin")
        ->required();
    sub->add_option("--max-states", opt.max_states,
                    "state bound for every exploration")
        ->check(CLI::PositiveNumber);
  };
  auto* check = app.add_subcommand("check", "answer the queries of a program");
  add_common(check);
  check->add_option("--oracle", opt.oracle, "decide every query with an oracle")
      ->check(CLI::IsMember({"sb", "barbed", "syntactic", "irredundant"}));
  check->add_flag("--trace-partitions", opt.trace,
                  "print the refinement trace of each query");
  check->add_flag("--parallel", opt.parallel, "answer queries concurrently");
  check->add_flag("--timing", opt.timing, "report wall time");

  auto* lts = app.add_subcommand("lts", "print the reachable states");
  add_common(lts);
  lts->add_flag("--dot", opt.dot, "emit Graphviz");
  lts->add_option("--mode", opt.mode, "transition relation")
      ->check(CLI::IsMember({"labeled", "reduction"}));

  auto* clo = app.add_subcommand("closure", "print the redundancy closure");
  add_common(clo);
  clo->add_flag("--dot", opt.dot, "emit Graphviz");

  auto* parts = app.add_subcommand("partitions", "print the refinement trace");
  add_common(parts);

  auto* bench =
      app.add_subcommand("bench-exp", "measure the exponential family");
  bench->add_option("--n", opt.ns, "even instance sizes")->delimiter(',');
  bench->add_option("--max-states", opt.max_states, "state bound")
      ->check(CLI::PositiveNumber);
  bench->add_option("--jsonl", opt.jsonl,
                    "write one JSON record per instance (- for stdout)");
  bench->add_flag("--timing", opt.timing, "report wall time");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitProgramError;
  }

  try {
    if (bench->parsed()) return cmd_bench(opt, out, err);
    Program prog = parse_program(read_file(opt.file));
    if (check->parsed()) return cmd_check(prog, opt, out, err);
    Context ctx(prog);
    if (lts->parsed()) {
      StepMode mode =
          opt.mode == "reduction" ? StepMode::reduction : StepMode::labeled;
      StateSpace space =
          reachable(prog.initial_states(), ctx, mode, opt.max_states);
      if (opt.dot) {
        out << to_dot(space, prog.system);
      } else {
        print_space(out, space, prog.system);
      }
      return kExitOk;
    }
    if (clo->parsed()) {
      StateSpace space = closure(prog.initial_states(), ctx, opt.max_states);
      if (opt.dot) {
        out << to_dot(space, prog.system, "closure");
      } else {
        print_space(out, space, prog.system);
      }
      return kExitOk;
    }
    RefinementResult r =
        ccp_partition_refine(prog.initial_states(), ctx, opt.max_states);
    print_trace(out, r, prog.system);
    return kExitOk;
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return exit_code_for(e);
  }
}

}  // namespace ccpbisim
