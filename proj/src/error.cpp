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

#include "ccpbisim/error.hpp"

namespace ccpbisim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::unknown_atom: return "UnknownAtom";
    case ErrorKind::duplicate_procedure: return "DuplicateProcedure";
    case ErrorKind::unbound_free_variable: return "UnboundFreeVariable";
    case ErrorKind::unknown_procedure: return "UnknownProcedure";
    case ErrorKind::unguarded_recursion: return "UnguardedRecursion";
    case ErrorKind::unsupported_in_table_mode: return "UnsupportedInTableMode";
    case ErrorKind::invalid_cylindrification: return "InvalidCylindrification";
    case ErrorKind::no_cylindrification: return "NoCylindrification";
    case ErrorKind::no_schematic_atoms: return "NoSchematicAtoms";
    case ErrorKind::fresh_pool_exhausted: return "FreshPoolExhausted";
    case ErrorKind::side_condition: return "SideCondition";
    case ErrorKind::too_many_atoms: return "TooManyAtoms";
    case ErrorKind::state_space_exceeded: return "StateSpaceExceeded";
    case ErrorKind::not_dominating: return "NotDominating";
    case ErrorKind::missing_derived_state: return "MissingDerivedState";
    case ErrorKind::invalid_parameter: return "InvalidParameter";
  }
  return "Error";
}

bool is_resource_error(ErrorKind kind) {
  return kind == ErrorKind::too_many_atoms ||
         kind == ErrorKind::state_space_exceeded ||
         kind == ErrorKind::fresh_pool_exhausted;
}

}  // namespace ccpbisim
