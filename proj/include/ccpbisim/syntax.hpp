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

#ifndef CCPBISIM_SYNTAX_HPP_
#define CCPBISIM_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ccpbisim/lattice.hpp"

namespace ccpbisim {

enum class ProcessKind { stop, tell, ask, par, sum, local, call };

/// Immutable ccp term. Copies share structure; equality is syntactic.
class Process {
 public:
  /// The inactive process 0.
  Process();

  static Process stop();
  static Process tell(Constraint c);
  static Process ask(Constraint c, Process body);
  static Process par(Process left, Process right);
  static Process sum(Process left, Process right);
  static Process local(std::string var, Constraint info, Process body);
  static Process call(std::string name, std::vector<std::string> args = {});

  ProcessKind kind() const noexcept { return node_->kind; }
  /// tell/ask guard, or the local store of a `local`.
  const Constraint& constraint() const noexcept { return node_->c; }
  /// Left operand of par/sum, or the body of ask/local.
  const Process& left() const noexcept { return *node_->left; }
  const Process& right() const noexcept { return *node_->right; }
  const Process& body() const noexcept { return *node_->left; }
  /// Bound variable of `local`, or procedure name of a call.
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<std::string>& args() const noexcept { return node_->args; }

  std::size_t hash() const noexcept { return node_->hash; }
  std::size_t node_count() const noexcept { return node_->size; }

  friend bool operator==(const Process& a, const Process& b);
  friend std::strong_ordering operator<=>(const Process& a, const Process& b);

 private:
  struct Node {
    ProcessKind kind = ProcessKind::stop;
    Constraint c;
    std::shared_ptr<const Process> left;
    std::shared_ptr<const Process> right;
    std::string name;
    std::vector<std::string> args;
    std::size_t hash = 0;
    std::size_t size = 1;
  };

  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Process make(Node node);

  std::shared_ptr<const Node> node_;
};

struct ProcessHash {
  std::size_t operator()(const Process& p) const noexcept { return p.hash(); }
};

struct ProcDef {
  std::vector<std::string> formals;
  Process body;
};

using ProcEnv = std::map<std::string, ProcDef, std::less<>>;

/// A state: a process running against a global store.
struct Configuration {
  Process process;
  Constraint store;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend std::strong_ordering operator<=>(const Configuration& a,
                                          const Configuration& b);
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& g) const noexcept {
    return g.process.hash() * 31 + g.store.hash();
  }
};

/// Relation asked about by a query.
enum class QueryKind { sb, barbed, syntactic, irredundant };

std::string to_string(QueryKind kind);

struct Query {
  QueryKind kind = QueryKind::sb;
  Configuration lhs;
  Configuration rhs;
  int line = 0;
};

struct Program {
  ConstraintSystem system;
  ProcEnv env;
  std::vector<Query> queries;
  std::vector<Configuration> initials;  // from `init`; may be empty

  /// The `init` configurations, or every query configuration in order of
  /// appearance (without duplicates) when there is no `init` statement.
  std::vector<Configuration> initial_states() const;
};

std::set<std::string> free_variables(const Process& p,
                                     const ConstraintSystem& sys);

/// Capture-avoiding simultaneous substitution. Bound `local` variables that
/// would capture a substituted name are renamed with fresh_var.
Process substitute(const Process& p, const Renaming& renaming,
                   const ConstraintSystem& sys);

/// Debug audit: every constraint inside p is canonical in sys.
bool all_canonical(const Process& p, const ConstraintSystem& sys);

// Pretty printing in the input grammar.
std::string to_string(const Process& p, const ConstraintSystem& sys);
std::string to_string(const Configuration& g, const ConstraintSystem& sys);
std::string to_string(const Program& program);

}  // namespace ccpbisim

#endif  // CCPBISIM_SYNTAX_HPP_
