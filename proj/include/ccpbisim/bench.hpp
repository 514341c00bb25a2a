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

// A family of programs whose closure grows exponentially while the reachable
// part grows linearly, and a harness that measures it.

#ifndef CCPBISIM_BENCH_HPP_
#define CCPBISIM_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccpbisim/error.hpp"
#include "ccpbisim/semantics.hpp"
#include "ccpbisim/syntax.hpp"

namespace ccpbisim {

/// Source text of the instance for n (even, at least 2). With atoms a_i and
/// b_i_j where b_i_j implies a_i:
///
///   s_i_0 = ask(true) -> s_i_1() + ask(b_i_0) -> 0 + ask(a_i) -> s_{i+1}_0()
///   s_i_1 = ask(b_i_1) -> 0 + ask(a_i) -> s_{i+1}_1()
///   s_n_0 = 0,  s_n_1 = ask(true) -> s_n_0()
///
/// and a single initial state <s_0_0(), true>. Throws InvalidParameter.
std::string exponential_source(int n);
Program gen_exponential(int n);

struct BenchReport {
  int n = 0;
  std::size_t config_states = 0;
  std::size_t config_transitions = 0;
  std::size_t closure_states = 0;
  std::size_t iterations = 0;
  std::uint64_t leq_calls = 0;
  double wall_time = 0;  // seconds
  std::optional<std::string> error;
  std::optional<ErrorKind> error_kind;

  double ratio() const {
    return config_states ? static_cast<double>(closure_states) / config_states
                         : 0.0;
  }
};

/// One report per n. Resource errors are recorded in the report.
std::vector<BenchReport> run_bench(const std::vector<int>& n_list,
                                   std::size_t bound = kDefaultStateBound);

/// One JSON object, no trailing newline. Wall time is omitted unless asked
/// for so that the output is reproducible.
std::string to_json(const BenchReport& r, bool with_time);

}  // namespace ccpbisim

#endif  // CCPBISIM_BENCH_HPP_
