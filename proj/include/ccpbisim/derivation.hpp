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

// Derivation between labeled transitions, redundancy, and the closure of a
// set of initial states under successors and derived targets.
//
// A transition <P,c> -a-> <P1,c'> derives <P,c> -b-> <P1,c''> when some e
// gives b = a lub e, c'' = c' lub e and a != b. For ccp transitions this
// is the same as a < b and c'' = c' lub b, which is what the checker uses.

#ifndef CCPBISIM_DERIVATION_HPP_
#define CCPBISIM_DERIVATION_HPP_

#include <cstddef>
#include <vector>

#include "ccpbisim/partition.hpp"
#include "ccpbisim/semantics.hpp"

namespace ccpbisim {

/// Reference check by search over every e of the lattice. Throws
/// TooManyAtoms when the lattice cannot be enumerated.
bool derives_def(const Transition& t1, const Transition& t2,
                 const ConstraintSystem& sys,
                 std::size_t threshold = kDefaultEnumerationThreshold);

/// Constant number of lattice operations.
bool derives(const Transition& t1, const Transition& t2,
             const ConstraintSystem& sys);

/// <process(t1.target), store(t1.target) lub beta>. Throws NotDominating
/// unless label(t1) < beta.
Configuration derived_target(const Transition& t1, const Constraint& beta,
                             const ConstraintSystem& sys);

/// Whether the rule edge `e` leaving `source` is dominated, up to the
/// blocks of `part`, by another rule edge leaving `source`. Throws
/// MissingDerivedState if a derived target is not in the space.
bool is_redundant(const StateSpace& space, std::size_t source, const Edge& e,
                  const Partition& part, const ConstraintSystem& sys);

/// The same question for a transition given by value.
bool is_redundant(const Transition& t, const Partition& part,
                  const StateSpace& space, const ConstraintSystem& sys);

/// Initial states, their labeled successors, and every derived target
/// needed to judge redundancy, explored until nothing new appears. Derived
/// transitions are stored in `derived_edges`. `derived[s]` is set for the
/// states that no path of rule transitions reaches from an initial state.
StateSpace closure(const std::vector<Configuration>& initials,
                   const Context& ctx, std::size_t bound = kDefaultStateBound);

}  // namespace ccpbisim

#endif  // CCPBISIM_DERIVATION_HPP_
