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

// Partition refinement. The ccp variant starts from "same store" and splits
// blocks using only the transitions that are irredundant in the current
// partition; redundancy is recomputed after every split.

#ifndef CCPBISIM_REFINEMENT_HPP_
#define CCPBISIM_REFINEMENT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ccpbisim/derivation.hpp"
#include "ccpbisim/partition.hpp"
#include "ccpbisim/semantics.hpp"

namespace ccpbisim {

struct RefineOptions {
  /// Visit states in a pseudo-random order; the result must not change.
  std::optional<std::uint64_t> shuffle_seed;
};

struct RefinementTrace {
  /// P0, P1, ..., ending with the repeated fixpoint.
  std::vector<Partition> partitions;
  /// redundant[n][s][k]: edge k of state s was redundant in partitions[n].
  std::vector<std::vector<std::vector<bool>>> redundant;
};

struct RefinementResult {
  StateSpace space;
  Partition partition;
  RefinementTrace trace;

  /// Number of refinement steps, the last one being the no-op.
  std::size_t iterations() const {
    return trace.partitions.empty() ? 0 : trace.partitions.size() - 1;
  }
};

/// Groups states by store.
Partition initial_partition_barbs(const StateSpace& space);

/// One round of ordinary refinement: same-block states stay together iff
/// they reach the same blocks with the same labels (rule edges only).
Partition refine_F(const Partition& part, const StateSpace& space,
                   const RefineOptions& opts = {});

/// Redundancy of every rule edge with respect to part.
std::vector<std::vector<bool>> redundancy(const Partition& part,
                                          const StateSpace& space,
                                          const ConstraintSystem& sys);

/// One round of the ccp refinement: same-block states stay related iff
/// every irredundant move of each is matched by a move of the other with the
/// same label into the same block. Blocks are the connected components of
/// that relation.
Partition refine_IR(const Partition& part, const StateSpace& space,
                    const ConstraintSystem& sys,
                    const RefineOptions& opts = {});

/// Runs refine_IR on the closure of `initials` from the barb partition
/// until nothing changes.
RefinementResult ccp_partition_refine(const std::vector<Configuration>& initials,
                                      const Context& ctx,
                                      std::size_t bound = kDefaultStateBound,
                                      const RefineOptions& opts = {});

/// Same as above on an already computed closure.
RefinementResult ccp_partition_refine(StateSpace space,
                                      const ConstraintSystem& sys,
                                      const RefineOptions& opts = {});

bool sb_equiv(const Configuration& a, const Configuration& b,
              const Context& ctx, std::size_t bound = kDefaultStateBound);

/// Fixpoint of refine_F from init.
Partition std_partition_refine(const StateSpace& space, const Partition& init,
                               const RefineOptions& opts = {});

}  // namespace ccpbisim

#endif  // CCPBISIM_REFINEMENT_HPP_
