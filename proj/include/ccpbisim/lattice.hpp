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

// Finite constraint systems built from named atoms.
//
// A constraint is a set of atoms closed under the declared implication
// rules. Adding atoms adds information, so c <= d iff atoms(c) is a subset of
// atoms(d). The empty set is `true`; any set containing a declared conflict
// pair collapses to the distinguished inconsistent element `false`.
//
// Two flavours exist. In table mode atoms are opaque names and an optional
// per-variable table supplies the existential quantifier. In schematic mode
// atoms are unary predicate instances p(v); implications and conflicts are
// stated per predicate and hold for every variable, and quantifying a
// variable away drops the atoms that mention it.

#ifndef CCPBISIM_LATTICE_HPP_
#define CCPBISIM_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccpbisim {

using AtomId = std::uint32_t;

/// Variable renaming, applied simultaneously.
using Renaming = std::map<std::string, std::string>;

inline constexpr std::size_t kDefaultEnumerationThreshold = 16;

class Constraint {
 public:
  /// The least element, `true`.
  Constraint() = default;

  static Constraint inconsistent() {
    Constraint c;
    c.false_ = true;
    return c;
  }

  bool is_false() const noexcept { return false_; }
  bool is_true() const noexcept { return !false_ && atoms_.empty(); }

  /// Sorted atom ids; empty for both `true` and `false`.
  const std::vector<AtomId>& atoms() const noexcept { return atoms_; }

  std::size_t hash() const noexcept;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  // Ordered by sorted atom list with `false` last.
  friend std::strong_ordering operator<=>(const Constraint& a,
                                          const Constraint& b);

 private:
  friend class ConstraintSystem;
  explicit Constraint(std::vector<AtomId> atoms) : atoms_(std::move(atoms)) {}

  bool false_ = false;
  std::vector<AtomId> atoms_;
};

struct ConstraintHash {
  std::size_t operator()(const Constraint& c) const noexcept {
    return c.hash();
  }
};

class ConstraintSystem {
 public:
  enum class Mode { table, schematic };

  struct ExistsEntry {
    std::string variable;
    std::vector<std::string> from;  // atom names; empty means true
    std::vector<std::string> to;
  };

  struct TableSpec {
    std::vector<std::string> atoms;
    std::vector<std::pair<std::string, std::string>> implications;
    std::vector<std::pair<std::string, std::string>> conflicts;
    std::vector<ExistsEntry> exists;
  };

  struct SchematicSpec {
    std::vector<std::string> predicates;
    std::vector<std::string> variables;
    std::size_t fresh_pool = 4;
    // Predicate-level rules: (p, q) stands for p(v) -> q(v) for every v.
    std::vector<std::pair<std::string, std::string>> implications;
    std::vector<std::pair<std::string, std::string>> conflicts;
  };

  /// An empty table-mode system (only `true` and `false`).
  ConstraintSystem();

  static ConstraintSystem table(const TableSpec& spec);
  static ConstraintSystem schematic(const SchematicSpec& spec);

  Mode mode() const noexcept { return mode_; }
  bool is_schematic() const noexcept { return mode_ == Mode::schematic; }

  std::size_t atom_count() const noexcept { return names_.size(); }
  const std::string& atom_name(AtomId a) const { return names_.at(a); }
  std::optional<AtomId> find_atom(std::string_view name) const;
  /// Throws UnknownAtom.
  AtomId atom(std::string_view name) const;

  // Schematic helpers. atom_variable is empty in table mode.
  const std::string& atom_variable(AtomId a) const { return vars_of_.at(a); }
  const std::string& atom_predicate(AtomId a) const { return preds_of_.at(a); }
  std::optional<AtomId> instantiate(std::string_view predicate,
                                    std::string_view variable) const;
  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  bool has_variable(std::string_view v) const;

  const std::vector<std::pair<AtomId, AtomId>>& implications() const noexcept {
    return implications_;
  }
  const std::vector<std::pair<AtomId, AtomId>>& conflicts() const noexcept {
    return conflicts_;
  }

  /// Closes `raw` under the implication rules; `false` if the closure holds a
  /// conflict pair.
  Constraint canonicalize(std::span<const AtomId> raw) const;
  Constraint canonicalize_names(std::span<const std::string> names) const;
  bool is_canonical(const Constraint& c) const;

  bool leq(const Constraint& c, const Constraint& d) const;
  bool lt(const Constraint& c, const Constraint& d) const {
    return c != d && leq(c, d);
  }
  Constraint lub(const Constraint& c, const Constraint& d) const;

  /// Every element of the lattice, `false` last. Throws TooManyAtoms above
  /// `threshold` atoms.
  std::vector<Constraint> enumerate_con0(
      std::size_t threshold = kDefaultEnumerationThreshold) const;

  /// The <=-minimal a with c <= d lub a. Returns {true} when d already
  /// entails c. Throws TooManyAtoms when more than `threshold` atoms could
  /// contribute to an enabler.
  std::vector<Constraint> min_enablers(
      const Constraint& c, const Constraint& d,
      std::size_t threshold = kDefaultEnumerationThreshold) const;

  bool has_cylindrification(std::string_view x) const;
  /// Existential quantification of x. Throws NoCylindrification.
  Constraint exists_var(std::string_view x, const Constraint& c) const;

  /// Variables mentioned by the atoms of c (always empty in table mode).
  std::set<std::string> free_variables(const Constraint& c) const;

  /// Renames the variables of schematic atoms. Table-mode constraints carry
  /// no variables and come back unchanged, unless the renaming touches a
  /// variable that has a quantifier table (NoSchematicAtoms).
  Constraint rename(const Constraint& c, const Renaming& renaming) const;

  /// Atoms of c not implied by another atom of c.
  std::vector<AtomId> generators(const Constraint& c) const;
  /// `true`, `false`, or generators joined by " & ".
  std::string to_string(const Constraint& c) const;

  /// The `system { ... }` block this system was built from.
  std::string declaration() const;

  /// Number of leq evaluations on the calling thread since the last reset.
  static std::uint64_t leq_calls() noexcept;
  static void reset_leq_calls() noexcept;

 private:
  void build_closures();
  void check_cylindrification_laws() const;

  Mode mode_ = Mode::table;
  TableSpec table_spec_;
  SchematicSpec schematic_spec_;
  std::vector<std::string> names_;  // sorted
  std::vector<std::string> vars_of_;
  std::vector<std::string> preds_of_;
  std::vector<std::string> variables_;
  std::map<std::pair<std::string, std::string>, AtomId, std::less<>>
      instances_;
  std::vector<std::pair<AtomId, AtomId>> implications_;
  std::vector<std::pair<AtomId, AtomId>> conflicts_;
  std::vector<std::vector<AtomId>> closure_;  // per atom, sorted, reflexive
  std::vector<std::vector<AtomId>> conflicting_;  // per atom partners
  std::vector<bool> in_conflict_;
  std::map<std::string, std::map<Constraint, Constraint>, std::less<>>
      exists_table_;
};

/// Least variable of the reserved namespace #0, #1, ... not in `avoid`.
std::string fresh_var(const std::set<std::string>& avoid);

}  // namespace ccpbisim

#endif  // CCPBISIM_LATTICE_HPP_
