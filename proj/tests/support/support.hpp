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

// Shared helpers for the test binaries: fixtures, a random program corpus,
// brute-force reference versions of a few kernel operations and a small
// Graphviz syntax checker.

#ifndef CCPBISIM_TESTS_SUPPORT_HPP_
#define CCPBISIM_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ccpbisim/lattice.hpp"
#include "ccpbisim/syntax.hpp"

namespace ccpbisim::testing {

std::string data_path(const std::string& name);
std::string read_text(const std::string& path);

/// The running example program (eight procedures, three initial states).
Program running_example();

/// Shorthand: parse `<P, c>` against prog.
Configuration conf(const Program& prog, const std::string& text);
Constraint cons(const ConstraintSystem& sys, const std::string& text);

/// Minimal elements of {a in Con0 | c <= d lub a}, by enumerating Con0.
std::vector<Constraint> brute_min_enablers(const ConstraintSystem& sys,
                                           const Constraint& c,
                                           const Constraint& d);

/// Random table-mode constraint system with at most max_atoms atoms.
ConstraintSystem random_system(std::mt19937_64& rng, std::size_t max_atoms,
                               bool with_conflicts);

struct CorpusEntry {
  Program program;
  std::uint64_t seed = 0;
  /// Configuration pairs over the program, including some designed to be
  /// equivalent.
  std::vector<std::pair<Configuration, Configuration>> pairs;
};

struct CorpusLimits {
  std::size_t max_atoms = 6;
  std::size_t max_nodes = 12;
  std::size_t max_states = 30;
};

/// Programs whose initial states are program.initials. Every program has
/// at most max_atoms atoms, every initial process at most max_nodes nodes,
/// and at most max_states labeled-reachable states. Deterministic in seed.
std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed,
                                       const CorpusLimits& limits = {});

struct DotSummary {
  bool ok = false;
  std::string error;
  std::size_t nodes = 0;  // node statements
  std::size_t edges = 0;  // edge statements
};

/// Accepts the subset of the Graphviz language used by the exporter and the
/// usual generic forms: digraph/graph headers, node/edge/attribute
/// statements, quoted or bare ids, attribute lists.
DotSummary check_dot(const std::string& text);

}  // namespace ccpbisim::testing

#endif  // CCPBISIM_TESTS_SUPPORT_HPP_
