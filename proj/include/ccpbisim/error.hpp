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

#ifndef CCPBISIM_ERROR_HPP_
#define CCPBISIM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccpbisim {

enum class ErrorKind {
  syntax,
  unknown_atom,
  duplicate_procedure,
  unbound_free_variable,
  unknown_procedure,
  unguarded_recursion,
  unsupported_in_table_mode,
  invalid_cylindrification,
  no_cylindrification,
  no_schematic_atoms,
  fresh_pool_exhausted,
  side_condition,
  too_many_atoms,
  state_space_exceeded,
  not_dominating,
  missing_derived_state,
  invalid_parameter,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by exhausting a configured bound rather than by a
/// malformed program.
bool is_resource_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, const std::string& what, int line, int column)
      : Error(kind, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ccpbisim

#endif  // CCPBISIM_ERROR_HPP_
