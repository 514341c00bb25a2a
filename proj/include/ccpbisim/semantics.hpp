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

// Reduction and labeled transition rules, barbs, and explicit state spaces.

#ifndef CCPBISIM_SEMANTICS_HPP_
#define CCPBISIM_SEMANTICS_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ccpbisim/syntax.hpp"

namespace ccpbisim {

inline constexpr std::size_t kDefaultStateBound = 100000;

enum class TransitionKind { reduction, labeled, derived };

struct Transition {
  Configuration source;
  Constraint label;  // `true` for reductions
  Configuration target;
  TransitionKind kind = TransitionKind::labeled;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Everything the step functions need besides the configuration.
struct Context {
  const ConstraintSystem& sys;
  const ProcEnv& env;
  std::size_t enabler_threshold = kDefaultEnumerationThreshold;

  explicit Context(const Program& p) : sys(p.system), env(p.env) {}
  Context(const ConstraintSystem& s, const ProcEnv& e) : sys(s), env(e) {}
};

/// One-step reducts, sorted and without duplicates.
std::vector<Configuration> reduce(const Configuration& g, const Context& ctx);

/// One-step labeled transitions, sorted by (label, target), deduplicated.
std::vector<Transition> labeled_steps(const Configuration& g,
                                      const Context& ctx);

bool satisfies_barb(const Configuration& g, const Constraint& c,
                    const ConstraintSystem& sys);

enum class StepMode { reduction, labeled };

struct Edge {
  Constraint label;
  std::size_t target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// States are numbered in discovery order. `edges` holds rule-generated
/// transitions; `derived_edges` holds transitions added by the closure.
class StateSpace {
 public:
  std::vector<Configuration> states;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<Edge>> derived_edges;
  std::vector<std::size_t> initials;
  std::vector<bool> derived;  // state was added only to check redundancy
  StepMode mode = StepMode::labeled;

  std::size_t size() const noexcept { return states.size(); }
  std::optional<std::size_t> find(const Configuration& g) const;

  /// Adds g if absent. Throws StateSpaceExceeded if that would exceed
  /// `bound` states. The flag tells whether g was new.
  std::pair<std::size_t, bool> intern(const Configuration& g,
                                      std::size_t bound);

  std::size_t edge_count() const;
  std::size_t derived_edge_count() const;

  /// All transitions, rule-generated first, each group ordered by source id.
  std::vector<Transition> transitions() const;

 private:
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index_;
};

/// Outgoing edges of g in the given mode, in step-function order.
std::vector<std::pair<Constraint, Configuration>> successors(
    const Configuration& g, const Context& ctx, StepMode mode);

/// Worklist closure of `initials` under the chosen step function.
StateSpace reachable(const std::vector<Configuration>& initials,
                     const Context& ctx, StepMode mode,
                     std::size_t bound = kDefaultStateBound);

/// Debug audit: every constraint in every state is canonical.
bool audit_canonical(const StateSpace& space, const ConstraintSystem& sys);

}  // namespace ccpbisim

#endif  // CCPBISIM_SEMANTICS_HPP_
