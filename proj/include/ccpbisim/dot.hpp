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

#ifndef CCPBISIM_DOT_HPP_
#define CCPBISIM_DOT_HPP_

#include <string>

#include "ccpbisim/semantics.hpp"

namespace ccpbisim {

/// Graphviz digraph of a state space. Node k is "n<k>". Initial states are
/// drawn bold, derived states dashed and derived transitions dotted.
std::string to_dot(const StateSpace& space, const ConstraintSystem& sys,
                   const std::string& name = "lts");

}  // namespace ccpbisim

#endif  // CCPBISIM_DOT_HPP_
