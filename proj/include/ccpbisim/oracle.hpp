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

// Reference equivalences computed as greatest fixpoints over explicit pair
// sets. They share only the lattice and the step functions with the
// partition-refinement checker, so the two can be tested against each other.

#ifndef CCPBISIM_ORACLE_HPP_
#define CCPBISIM_ORACLE_HPP_

#include <cstddef>

#include "ccpbisim/semantics.hpp"

namespace ccpbisim {

/// Saturated barbed bisimilarity. The pair universe is everything reachable
/// from the two inputs by reductions and by adding any lattice element to
/// the store. Throws TooManyAtoms or StateSpaceExceeded.
bool sb_oracle(const Configuration& a, const Configuration& b,
               const Context& ctx, std::size_t bound = kDefaultStateBound);

/// Barbed bisimilarity over reductions (no store strengthening).
bool barbed_bisim(const Configuration& a, const Configuration& b,
                  const Context& ctx, std::size_t bound = kDefaultStateBound);

/// Bisimilarity over labeled transitions with equal labels and barbs.
bool syntactic_bisim(const Configuration& a, const Configuration& b,
                     const Context& ctx, std::size_t bound = kDefaultStateBound);

/// Irredundant bisimilarity: only moves that no other move derives up to the
/// candidate relation must be matched. Derivation is checked by searching the
/// whole lattice. Throws TooManyAtoms or StateSpaceExceeded.
bool irredundant_gfp(const Configuration& a, const Configuration& b,
                     const Context& ctx, std::size_t bound = kDefaultStateBound);

}  // namespace ccpbisim

#endif  // CCPBISIM_ORACLE_HPP_
