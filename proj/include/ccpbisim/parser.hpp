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

// Program files.
//
//   program    ::= [system] item*
//   system     ::= "system" "{" decl* "}"
//   decl       ::= "atoms" ident ("," ident)* ";"
//                | "schema" ident ("," ident)* ";"
//                | "vars" ident ("," ident)* ";"
//                | "fresh" number ";"
//                | "imply" atom "->" atom ";"
//                | "conflict" atom "," atom ";"
//                | "exists" ident ":" constraint "->" constraint ";"
//   item       ::= "proc" ident "(" [ident ("," ident)*] ")" "=" process ";"
//                | "init" config ("," config)* ";"
//                | "query" [kind] config "~" config ";"
//   kind       ::= "sb" | "barbed" | "syntactic" | "irredundant"
//   config     ::= "<" process "," constraint ">"
//   process    ::= par ("+" par)*
//   par        ::= prefix ("||" prefix)*
//   prefix     ::= "0" | "tell" "(" constraint ")"
//                | "ask" "(" constraint ")" "->" prefix
//                | "local" ident ["(" constraint ")"] "in" prefix
//                | ident "(" [ident ("," ident)*] ")" | "(" process ")"
//   constraint ::= "true" | "false" | atom ("&" atom)*
//   atom       ::= ident | ident "(" ident ")"      (the latter with `schema`)
//
// `+` and `||` fold left. The body of `ask` and `local` is a single prefix
// term, so `ask(c) -> P() + Q()` is a sum. Identifiers may end in primes
// (R', Q''). Comments are `//` to end of line or `/* ... */`.

#ifndef CCPBISIM_PARSER_HPP_
#define CCPBISIM_PARSER_HPP_

#include <string_view>

#include "ccpbisim/syntax.hpp"

namespace ccpbisim {

/// Throws SyntaxError (with kinds syntax, unknown_atom, duplicate_procedure,
/// unbound_free_variable, unknown_procedure, unguarded_recursion,
/// unsupported_in_table_mode, no_cylindrification) at the offending position.
Program parse_program(std::string_view text);

/// Parses a single process term against an already loaded program.
Process parse_process(std::string_view text, const Program& context);

/// Parses `<process, constraint>` against an already loaded program.
Configuration parse_configuration(std::string_view text,
                                  const Program& context);

}  // namespace ccpbisim

#endif  // CCPBISIM_PARSER_HPP_
