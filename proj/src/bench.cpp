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

#include "ccpbisim/bench.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "ccpbisim/error.hpp"
#include "ccpbisim/parser.hpp"
#include "ccpbisim/refinement.hpp"

namespace ccpbisim {

namespace {

std::string s(int i, int j) {
  return "s_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

std::string exponential_source(int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::invalid_parameter,
                "n must be even and at least 2, got " + std::to_string(n));
  }
  std::ostringstream out;
  out << "system {\n  atoms";
  for (int i = 0; i < n; ++i) {
    out << (i ? ", " : " ") << "a_" << i << ", b_" << i << "_0, b_" << i
        << "_1";
  }
  out << ";\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) {
      out << "  imply b_" << i << "_" << j << " -> a_" << i << ";\n";
    }
  }
  out << "}\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) {
      out << "proc " << s(i, j) << "() = ";
      if (j == 0) out << "ask(true) -> " << s(i, 1) << "() + ";
      out << "ask(b_" << i << "_" << j << ") -> 0 + ask(a_" << i << ") -> "
          << s(i + 1, j) << "();\n";
    }
  }
  out << "proc " << s(n, 0) << "() = 0;\n";
  out << "proc " << s(n, 1) << "() = ask(true) -> " << s(n, 0) << "();\n";
  out << "init <" << s(0, 0) << "(), true>;\n";
  return out.str();
}

Program gen_exponential(int n) { return parse_program(exponential_source(n)); }

std::vector<BenchReport> run_bench(const std::vector<int>& n_list,
                                   std::size_t bound) {
  std::vector<BenchReport> out;
  for (int n : n_list) {
    BenchReport r;
    r.n = n;
    auto start = std::chrono::steady_clock::now();
    try {
      Program prog = gen_exponential(n);
      Context ctx(prog);
      StateSpace reach =
          reachable(prog.initial_states(), ctx, StepMode::labeled, bound);
      r.config_states = reach.size();
      r.config_transitions = reach.edge_count();
      ConstraintSystem::reset_leq_calls();
      RefinementResult res = ccp_partition_refine(prog.initial_states(), ctx, bound);
      r.leq_calls = ConstraintSystem::leq_calls();
      r.closure_states = res.space.size();
      r.iterations = res.iterations();
    } catch (const Error& e) {
      r.error = std::string(to_string(e.kind())) + ": " + e.what();
      r.error_kind = e.kind();
    }
    r.wall_time = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_json(const BenchReport& r, bool with_time) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["config_states"] = r.config_states;
  j["config_transitions"] = r.config_transitions;
  j["closure_states"] = r.closure_states;
  j["iterations"] = r.iterations;
  j["leq_calls"] = r.leq_calls;
  if (with_time) j["wall_time"] = r.wall_time;
  if (r.error) {
    j["error"] = *r.error;
  } else {
    j["error"] = nullptr;
  }
  return j.dump();
}

}  // namespace ccpbisim
