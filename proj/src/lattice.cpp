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

#include "ccpbisim/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ccpbisim/error.hpp"

namespace ccpbisim {

namespace {

thread_local std::uint64_t g_leq_calls = 0;

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string instance_name(std::string_view pred, std::string_view var) {
  std::string s(pred);
  s += '(';
  s += var;
  s += ')';
  return s;
}

}  // namespace

std::size_t Constraint::hash() const noexcept {
  std::size_t h = false_ ? 0x51ed270b27e3ULL : 0x2545f4914f6cULL;
  for (AtomId a : atoms_) h = hash_combine(h, a);
  return h;
}

std::strong_ordering operator<=>(const Constraint& a, const Constraint& b) {
  if (a.false_ != b.false_) {
    return a.false_ ? std::strong_ordering::greater
                    : std::strong_ordering::less;
  }
  return std::lexicographical_compare_three_way(
      a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
}

ConstraintSystem::ConstraintSystem() { build_closures(); }

ConstraintSystem ConstraintSystem::table(const TableSpec& spec) {
  ConstraintSystem sys;
  sys.mode_ = Mode::table;
  sys.table_spec_ = spec;
  std::set<std::string> seen;
  for (const auto& a : spec.atoms) {
    if (a.empty()) throw Error(ErrorKind::syntax, "empty atom name");
    if (!seen.insert(a).second) {
      throw Error(ErrorKind::syntax, "atom '" + a + "' declared twice");
    }
  }
  sys.names_.assign(seen.begin(), seen.end());
  sys.vars_of_.assign(sys.names_.size(), std::string());
  sys.preds_of_ = sys.names_;
  for (const auto& [from, to] : spec.implications) {
    sys.implications_.emplace_back(sys.atom(from), sys.atom(to));
  }
  for (const auto& [p, q] : spec.conflicts) {
    sys.conflicts_.emplace_back(std::min(sys.atom(p), sys.atom(q)),
                                std::max(sys.atom(p), sys.atom(q)));
  }
  std::sort(sys.implications_.begin(), sys.implications_.end());
  sys.implications_.erase(
      std::unique(sys.implications_.begin(), sys.implications_.end()),
      sys.implications_.end());
  std::sort(sys.conflicts_.begin(), sys.conflicts_.end());
  sys.conflicts_.erase(std::unique(sys.conflicts_.begin(), sys.conflicts_.end()),
                       sys.conflicts_.end());
  sys.build_closures();

  for (const auto& entry : spec.exists) {
    Constraint from = sys.canonicalize_names(entry.from);
    Constraint to = sys.canonicalize_names(entry.to);
    auto& table = sys.exists_table_[entry.variable];
    auto [it, inserted] = table.emplace(from, to);
    if (!inserted && it->second != to) {
      throw Error(ErrorKind::invalid_cylindrification,
                  "conflicting exists entries for " + entry.variable + ": " +
                      sys.to_string(from));
    }
  }
  sys.check_cylindrification_laws();
  return sys;
}

ConstraintSystem ConstraintSystem::schematic(const SchematicSpec& spec) {
  ConstraintSystem sys;
  sys.mode_ = Mode::schematic;
  sys.schematic_spec_ = spec;
  std::set<std::string> preds(spec.predicates.begin(), spec.predicates.end());
  if (preds.size() != spec.predicates.size()) {
    throw Error(ErrorKind::syntax, "predicate declared twice");
  }
  std::set<std::string> vars(spec.variables.begin(), spec.variables.end());
  for (const auto& v : vars) {
    if (!v.empty() && v[0] == '#') {
      throw Error(ErrorKind::syntax,
                  "variable names starting with '#' are reserved: " + v);
    }
  }
  std::set<std::string> none;
  for (std::size_t i = 0; i < spec.fresh_pool; ++i) {
    std::string f = fresh_var(none);
    none.insert(f);
    vars.insert(f);
  }
  sys.variables_.assign(vars.begin(), vars.end());

  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> all;
  for (const auto& p : preds) {
    for (const auto& v : vars) all.push_back({instance_name(p, v), {p, v}});
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    sys.names_.push_back(all[i].first);
    sys.preds_of_.push_back(all[i].second.first);
    sys.vars_of_.push_back(all[i].second.second);
    sys.instances_.emplace(all[i].second, static_cast<AtomId>(i));
  }
  auto need_pred = [&](const std::string& p) {
    if (!preds.count(p)) throw Error(ErrorKind::unknown_atom,
                                     "unknown predicate '" + p + "'");
  };
  for (const auto& [p, q] : spec.implications) {
    need_pred(p);
    need_pred(q);
    for (const auto& v : vars) {
      sys.implications_.emplace_back(*sys.instantiate(p, v),
                                     *sys.instantiate(q, v));
    }
  }
  for (const auto& [p, q] : spec.conflicts) {
    need_pred(p);
    need_pred(q);
    for (const auto& v : vars) {
      AtomId a = *sys.instantiate(p, v);
      AtomId b = *sys.instantiate(q, v);
      sys.conflicts_.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(sys.implications_.begin(), sys.implications_.end());
  sys.implications_.erase(
      std::unique(sys.implications_.begin(), sys.implications_.end()),
      sys.implications_.end());
  std::sort(sys.conflicts_.begin(), sys.conflicts_.end());
  sys.conflicts_.erase(std::unique(sys.conflicts_.begin(), sys.conflicts_.end()),
                       sys.conflicts_.end());
  sys.build_closures();
  return sys;
}

void ConstraintSystem::build_closures() {
  const std::size_t n = names_.size();
  std::vector<std::vector<AtomId>> succ(n);
  for (const auto& [from, to] : implications_) succ[from].push_back(to);
  closure_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    std::deque<AtomId> work{static_cast<AtomId>(a)};
    seen[a] = true;
    while (!work.empty()) {
      AtomId x = work.front();
      work.pop_front();
      closure_[a].push_back(x);
      for (AtomId y : succ[x]) {
        if (!seen[y]) {
          seen[y] = true;
          work.push_back(y);
        }
      }
    }
    std::sort(closure_[a].begin(), closure_[a].end());
  }
  conflicting_.assign(n, {});
  in_conflict_.assign(n, false);
  for (const auto& [p, q] : conflicts_) {
    conflicting_[p].push_back(q);
    conflicting_[q].push_back(p);
    in_conflict_[p] = in_conflict_[q] = true;
  }
}

void ConstraintSystem::check_cylindrification_laws() const {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::invalid_cylindrification, what);
  };
  auto lookup = [&](const std::string& x,
                    const Constraint& c) -> std::optional<Constraint> {
    if (c.is_true() || c.is_false()) return c;
    auto t = exists_table_.find(x);
    if (t == exists_table_.end()) return std::nullopt;
    auto it = t->second.find(c);
    if (it == t->second.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& [x, table] : exists_table_) {
    for (const auto& [c, e] : table) {
      if (!leq(e, c)) {
        fail("exists " + x + " of " + to_string(c) + " is not below it");
      }
      for (const auto& [d, ed] : table) {
        // exists x (c lub exists x d) = exists x c lub exists x d
        auto lhs = lookup(x, lub(c, ed));
        if (lhs && *lhs != lub(e, ed)) {
          fail("exists " + x + " does not distribute over " + to_string(c) +
               " and " + to_string(d));
        }
      }
      for (const auto& [y, other] : exists_table_) {
        if (y == x) continue;
        auto ey = lookup(y, c);
        if (!ey) continue;
        auto xy = lookup(x, *ey);
        auto yx = lookup(y, e);
        if (xy && yx && *xy != *yx) {
          fail("exists " + x + " and exists " + y + " do not commute on " +
               to_string(c));
        }
      }
    }
  }
}

std::optional<AtomId> ConstraintSystem::find_atom(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<AtomId>(it - names_.begin());
}

AtomId ConstraintSystem::atom(std::string_view name) const {
  auto a = find_atom(name);
  if (!a) {
    throw Error(ErrorKind::unknown_atom,
                "unknown atom '" + std::string(name) + "'");
  }
  return *a;
}

std::optional<AtomId> ConstraintSystem::instantiate(
    std::string_view predicate, std::string_view variable) const {
  auto it = instances_.find(
      std::pair<std::string, std::string>(predicate, variable));
  if (it == instances_.end()) return std::nullopt;
  return it->second;
}

bool ConstraintSystem::has_variable(std::string_view v) const {
  return std::binary_search(variables_.begin(), variables_.end(), v);
}

Constraint ConstraintSystem::canonicalize(std::span<const AtomId> raw) const {
  const std::size_t n = names_.size();
  std::vector<char> mark(n, 0);
  for (AtomId a : raw) {
    if (a >= n) {
      throw Error(ErrorKind::unknown_atom,
                  "atom id " + std::to_string(a) + " out of range");
    }
    if (mark[a]) continue;
    for (AtomId b : closure_[a]) mark[b] = 1;
  }
  std::vector<AtomId> atoms;
  for (std::size_t a = 0; a < n; ++a) {
    if (!mark[a]) continue;
    if (in_conflict_[a]) {
      for (AtomId b : conflicting_[a]) {
        if (mark[b]) return Constraint::inconsistent();
      }
    }
    atoms.push_back(static_cast<AtomId>(a));
  }
  return Constraint(std::move(atoms));
}

Constraint ConstraintSystem::canonicalize_names(
    std::span<const std::string> names) const {
  std::vector<AtomId> raw;
  raw.reserve(names.size());
  for (const auto& n : names) raw.push_back(atom(n));
  return canonicalize(raw);
}

bool ConstraintSystem::is_canonical(const Constraint& c) const {
  if (c.is_false()) return true;
  return canonicalize(c.atoms()) == c;
}

bool ConstraintSystem::leq(const Constraint& c, const Constraint& d) const {
  ++g_leq_calls;
  if (d.is_false()) return true;
  if (c.is_false()) return false;
  return std::includes(d.atoms().begin(), d.atoms().end(), c.atoms().begin(),
                       c.atoms().end());
}

Constraint ConstraintSystem::lub(const Constraint& c,
                                 const Constraint& d) const {
  if (c.is_false() || d.is_false()) return Constraint::inconsistent();
  if (c.atoms().empty()) return d;
  if (d.atoms().empty()) return c;
  std::vector<AtomId> u;
  std::set_union(c.atoms().begin(), c.atoms().end(), d.atoms().begin(),
                 d.atoms().end(), std::back_inserter(u));
  // The union of closed sets is closed; only conflicts can change it.
  if (!conflicts_.empty()) {
    for (const auto& [p, q] : conflicts_) {
      if (std::binary_search(u.begin(), u.end(), p) &&
          std::binary_search(u.begin(), u.end(), q)) {
        return Constraint::inconsistent();
      }
    }
  }
  return Constraint(std::move(u));
}

std::vector<Constraint> ConstraintSystem::enumerate_con0(
    std::size_t threshold) const {
  const std::size_t n = names_.size();
  if (n > threshold || n >= 63) {
    throw Error(ErrorKind::too_many_atoms,
                std::to_string(n) + " atoms exceed the enumeration threshold " +
                    std::to_string(threshold));
  }
  std::vector<std::uint64_t> closure_mask(n, 0);
  std::vector<std::uint64_t> conflict_mask(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (AtomId b : closure_[a]) closure_mask[a] |= std::uint64_t{1} << b;
    for (AtomId b : conflicting_[a]) conflict_mask[a] |= std::uint64_t{1} << b;
  }
  std::vector<Constraint> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      ok = (closure_mask[a] & ~mask) == 0 && (conflict_mask[a] & mask) == 0;
    }
    if (!ok) continue;
    std::vector<AtomId> atoms;
    for (std::size_t a = 0; a < n; ++a) {
      if (mask >> a & 1) atoms.push_back(static_cast<AtomId>(a));
    }
    out.push_back(Constraint(std::move(atoms)));
  }
  std::sort(out.begin(), out.end());
  out.push_back(Constraint::inconsistent());
  return out;
}

std::vector<Constraint> ConstraintSystem::min_enablers(
    const Constraint& c, const Constraint& d, std::size_t threshold) const {
  if (leq(c, d)) return {Constraint()};

  // A minimal enabler is the closure of atoms that either yield a missing
  // atom of c or reach a conflict; no other atom can be part of one.
  std::vector<AtomId> missing;
  if (!c.is_false()) {
    std::set_difference(c.atoms().begin(), c.atoms().end(), d.atoms().begin(),
                        d.atoms().end(), std::back_inserter(missing));
  }
  std::vector<AtomId> relevant;
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (std::binary_search(d.atoms().begin(), d.atoms().end(), a)) continue;
    bool useful = false;
    for (AtomId b : closure_[a]) {
      if (in_conflict_[b] ||
          std::binary_search(missing.begin(), missing.end(), b)) {
        useful = true;
        break;
      }
    }
    if (useful) relevant.push_back(static_cast<AtomId>(a));
  }
  if (relevant.size() > threshold || relevant.size() >= 63) {
    throw Error(ErrorKind::too_many_atoms,
                std::to_string(relevant.size()) +
                    " candidate atoms exceed the enabler threshold " +
                    std::to_string(threshold));
  }

  std::set<Constraint> enablers{Constraint::inconsistent()};
  std::vector<AtomId> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << relevant.size());
       ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < relevant.size(); ++i) {
      if (mask >> i & 1) subset.push_back(relevant[i]);
    }
    Constraint a = canonicalize(subset);
    if (leq(c, lub(d, a))) enablers.insert(std::move(a));
  }

  std::vector<Constraint> minimal;
  for (const auto& m : enablers) {
    bool dominated = false;
    for (const auto& other : enablers) {
      if (lt(other, m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(m);
  }
  return minimal;
}

bool ConstraintSystem::has_cylindrification(std::string_view x) const {
  if (is_schematic()) return true;
  return exists_table_.find(x) != exists_table_.end();
}

Constraint ConstraintSystem::exists_var(std::string_view x,
                                        const Constraint& c) const {
  if (c.is_false()) return c;
  if (is_schematic()) {
    std::vector<AtomId> kept;
    for (AtomId a : c.atoms()) {
      if (vars_of_[a] != x) kept.push_back(a);
    }
    return Constraint(std::move(kept));
  }
  if (c.is_true()) return c;
  auto t = exists_table_.find(x);
  if (t == exists_table_.end()) {
    throw Error(ErrorKind::no_cylindrification,
                "no exists table for variable '" + std::string(x) + "'");
  }
  auto it = t->second.find(c);
  if (it == t->second.end()) {
    throw Error(ErrorKind::no_cylindrification,
                "exists table for '" + std::string(x) + "' has no entry for " +
                    to_string(c));
  }
  return it->second;
}

std::set<std::string> ConstraintSystem::free_variables(
    const Constraint& c) const {
  std::set<std::string> out;
  if (!is_schematic()) return out;
  for (AtomId a : c.atoms()) out.insert(vars_of_[a]);
  return out;
}

Constraint ConstraintSystem::rename(const Constraint& c,
                                    const Renaming& renaming) const {
  if (c.is_false() || c.is_true()) return c;
  if (!is_schematic()) {
    for (const auto& [from, to] : renaming) {
      if (from != to && exists_table_.count(from)) {
        throw Error(ErrorKind::no_schematic_atoms,
                    "cannot rename '" + from + "' in " + to_string(c) +
                        ": table-mode atoms are opaque");
      }
    }
    return c;
  }
  std::vector<AtomId> raw;
  raw.reserve(c.atoms().size());
  for (AtomId a : c.atoms()) {
    auto it = renaming.find(vars_of_[a]);
    if (it == renaming.end()) {
      raw.push_back(a);
      continue;
    }
    auto b = instantiate(preds_of_[a], it->second);
    if (!b) {
      throw Error(ErrorKind::no_schematic_atoms,
                  "no atom " + instance_name(preds_of_[a], it->second) +
                      " for renaming " + names_[a]);
    }
    raw.push_back(*b);
  }
  return canonicalize(raw);
}

std::vector<AtomId> ConstraintSystem::generators(const Constraint& c) const {
  std::vector<AtomId> out;
  for (AtomId a : c.atoms()) {
    bool implied = false;
    for (AtomId b : c.atoms()) {
      if (b == a) continue;
      const auto& cb = closure_[b];
      if (!std::binary_search(cb.begin(), cb.end(), a)) continue;
      const auto& ca = closure_[a];
      // Atoms on an implication cycle are represented by the smallest one.
      if (!std::binary_search(ca.begin(), ca.end(), b) || b < a) {
        implied = true;
        break;
      }
    }
    if (!implied) out.push_back(a);
  }
  return out;
}

std::string ConstraintSystem::to_string(const Constraint& c) const {
  if (c.is_false()) return "false";
  if (c.is_true()) return "true";
  std::string s;
  for (AtomId a : generators(c)) {
    if (!s.empty()) s += " & ";
    s += names_.at(a);
  }
  return s;
}

std::string ConstraintSystem::declaration() const {
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) {
      if (!s.empty()) s += ", ";
      s += x;
    }
    return s;
  };
  auto conj = [](const std::vector<std::string>& xs) {
    if (xs.empty()) return std::string("true");
    std::string s;
    for (const auto& x : xs) {
      if (!s.empty()) s += " & ";
      s += x;
    }
    return s;
  };
  std::string out = "system {\n";
  if (is_schematic()) {
    const auto& sp = schematic_spec_;
    if (!sp.predicates.empty()) out += "  schema " + join(sp.predicates) + ";\n";
    if (!sp.variables.empty()) out += "  vars " + join(sp.variables) + ";\n";
    out += "  fresh " + std::to_string(sp.fresh_pool) + ";\n";
    for (const auto& [p, q] : sp.implications) {
      out += "  imply " + p + " -> " + q + ";\n";
    }
    for (const auto& [p, q] : sp.conflicts) {
      out += "  conflict " + p + ", " + q + ";\n";
    }
  } else {
    const auto& tp = table_spec_;
    if (!tp.atoms.empty()) out += "  atoms " + join(tp.atoms) + ";\n";
    for (const auto& [p, q] : tp.implications) {
      out += "  imply " + p + " -> " + q + ";\n";
    }
    for (const auto& [p, q] : tp.conflicts) {
      out += "  conflict " + p + ", " + q + ";\n";
    }
    for (const auto& e : tp.exists) {
      out += "  exists " + e.variable + ": " + conj(e.from) + " -> " +
             conj(e.to) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::uint64_t ConstraintSystem::leq_calls() noexcept { return g_leq_calls; }
void ConstraintSystem::reset_leq_calls() noexcept { g_leq_calls = 0; }

std::string fresh_var(const std::set<std::string>& avoid) {
  for (std::size_t k = 0;; ++k) {
    std::string v = "#" + std::to_string(k);
    if (!avoid.count(v)) return v;
  }
}

}  // namespace ccpbisim
