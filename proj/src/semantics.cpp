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

#include "ccpbisim/semantics.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

#include "ccpbisim/error.hpp"

namespace ccpbisim {

namespace {

using Step = std::pair<Constraint, Configuration>;

void sort_unique(std::vector<Step>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// The part of s not already accounted for by base (s is at least base).
Constraint residue(const Constraint& s, const Constraint& base,
                   const ConstraintSystem& sys) {
  if (s.is_false()) return s;
  std::vector<AtomId> rest;
  std::set_difference(s.atoms().begin(), s.atoms().end(), base.atoms().begin(),
                      base.atoms().end(), std::back_inserter(rest));
  return sys.canonicalize(rest);
}

Process unfold(const Process& call, const Context& ctx) {
  auto it = ctx.env.find(call.name());
  if (it == ctx.env.end()) {
    throw Error(ErrorKind::unknown_procedure,
                "undefined procedure '" + call.name() + "'");
  }
  const ProcDef& def = it->second;
  Renaming r;
  for (std::size_t i = 0; i < def.formals.size(); ++i) {
    r.emplace(def.formals[i], call.args().at(i));
  }
  return substitute(def.body, r, ctx.sys);
}

void reduce_into(const Process& p, const Constraint& d, const Context& ctx,
                 std::vector<Step>& out) {
  const auto& sys = ctx.sys;
  switch (p.kind()) {
    case ProcessKind::stop:
      return;
    case ProcessKind::tell:
      out.emplace_back(Constraint(),
                       Configuration{Process::stop(), sys.lub(d, p.constraint())});
      return;
    case ProcessKind::ask:
      if (sys.leq(p.constraint(), d)) {
        out.emplace_back(Constraint(), Configuration{p.body(), d});
      }
      return;
    case ProcessKind::par: {
      std::vector<Step> l, r;
      reduce_into(p.left(), d, ctx, l);
      reduce_into(p.right(), d, ctx, r);
      for (auto& [a, g] : l) {
        out.emplace_back(a, Configuration{Process::par(g.process, p.right()),
                                          g.store});
      }
      for (auto& [a, g] : r) {
        out.emplace_back(a, Configuration{Process::par(p.left(), g.process),
                                          g.store});
      }
      return;
    }
    case ProcessKind::sum:
      reduce_into(p.left(), d, ctx, out);
      reduce_into(p.right(), d, ctx, out);
      return;
    case ProcessKind::call:
      reduce_into(unfold(p, ctx), d, ctx, out);
      return;
    case ProcessKind::local: {
      const std::string& x = p.name();
      Constraint hidden = sys.exists_var(x, d);
      std::vector<Step> inner;
      reduce_into(p.body(), sys.lub(p.constraint(), hidden), ctx, inner);
      for (auto& [a, g] : inner) {
        Constraint e2 = residue(g.store, hidden, sys);
        out.emplace_back(
            a, Configuration{Process::local(x, e2, g.process),
                             sys.lub(d, sys.exists_var(x, e2))});
      }
      return;
    }
  }
}

void labeled_into(const Process& p, const Constraint& d, const Context& ctx,
                  std::vector<Step>& out) {
  const auto& sys = ctx.sys;
  switch (p.kind()) {
    case ProcessKind::stop:
      return;
    case ProcessKind::tell:
      out.emplace_back(Constraint(),
                       Configuration{Process::stop(), sys.lub(d, p.constraint())});
      return;
    case ProcessKind::ask:
      for (auto& alpha :
           sys.min_enablers(p.constraint(), d, ctx.enabler_threshold)) {
        Constraint target = sys.lub(d, alpha);
        out.emplace_back(std::move(alpha),
                         Configuration{p.body(), std::move(target)});
      }
      return;
    case ProcessKind::par: {
      std::vector<Step> l, r;
      labeled_into(p.left(), d, ctx, l);
      labeled_into(p.right(), d, ctx, r);
      for (auto& [a, g] : l) {
        out.emplace_back(a, Configuration{Process::par(g.process, p.right()),
                                          g.store});
      }
      for (auto& [a, g] : r) {
        out.emplace_back(a, Configuration{Process::par(p.left(), g.process),
                                          g.store});
      }
      return;
    }
    case ProcessKind::sum:
      labeled_into(p.left(), d, ctx, out);
      labeled_into(p.right(), d, ctx, out);
      return;
    case ProcessKind::call:
      labeled_into(unfold(p, ctx), d, ctx, out);
      return;
    case ProcessKind::local: {
      const std::string& x = p.name();
      const Process& body = p.body();
      const Constraint& e = p.constraint();
      std::set<std::string> avoid = free_variables(body, sys);
      for (const auto& v : sys.free_variables(e)) avoid.insert(v);
      for (const auto& v : sys.free_variables(d)) avoid.insert(v);
      avoid.insert(x);
      std::string z = fresh_var(avoid);
      if (sys.is_schematic() && !sys.has_variable(z)) {
        throw Error(ErrorKind::fresh_pool_exhausted,
                    "no atoms for fresh variable " + z +
                        "; raise the `fresh` pool size");
      }
      Renaming to_z{{x, z}};
      Renaming to_x{{z, x}};
      Process pz = sys.is_schematic() ? substitute(body, to_z, sys) : body;
      Constraint ez = sys.is_schematic() ? sys.rename(e, to_z) : e;
      std::vector<Step> inner;
      labeled_into(pz, sys.lub(ez, d), ctx, inner);
      for (auto& [alpha, g] : inner) {
        if (sys.free_variables(alpha).count(z)) continue;
        Constraint base = sys.lub(d, alpha);
        Constraint e2 = residue(g.store, base, sys);
        if (sys.free_variables(e2).count(x)) {
          throw Error(ErrorKind::side_condition,
                      "local " + x + ": the residual store " +
                          sys.to_string(e2) + " mentions " + x);
        }
        Process p2 = g.process;
        if (sys.is_schematic()) {
          e2 = sys.rename(e2, to_x);
          p2 = substitute(p2, to_x, sys);
        }
        Constraint store = sys.lub(sys.exists_var(x, e2), base);
        out.emplace_back(alpha, Configuration{Process::local(x, e2, p2),
                                              std::move(store)});
      }
      return;
    }
  }
}

}  // namespace

std::vector<Configuration> reduce(const Configuration& g, const Context& ctx) {
  std::vector<Step> steps;
  reduce_into(g.process, g.store, ctx, steps);
  sort_unique(steps);
  std::vector<Configuration> out;
  out.reserve(steps.size());
  for (auto& s : steps) out.push_back(std::move(s.second));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Transition> labeled_steps(const Configuration& g,
                                      const Context& ctx) {
  std::vector<Step> steps;
  labeled_into(g.process, g.store, ctx, steps);
  sort_unique(steps);
  std::vector<Transition> out;
  out.reserve(steps.size());
  for (auto& [a, t] : steps) {
    out.push_back(Transition{g, std::move(a), std::move(t),
                             TransitionKind::labeled});
  }
  return out;
}

bool satisfies_barb(const Configuration& g, const Constraint& c,
                    const ConstraintSystem& sys) {
  return sys.leq(c, g.store);
}

std::vector<std::pair<Constraint, Configuration>> successors(
    const Configuration& g, const Context& ctx, StepMode mode) {
  std::vector<Step> steps;
  if (mode == StepMode::labeled) {
    labeled_into(g.process, g.store, ctx, steps);
  } else {
    reduce_into(g.process, g.store, ctx, steps);
  }
  sort_unique(steps);
  return steps;
}

std::optional<std::size_t> StateSpace::find(const Configuration& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, bool> StateSpace::intern(const Configuration& g,
                                                std::size_t bound) {
  auto it = index_.find(g);
  if (it != index_.end()) return {it->second, false};
  if (states.size() >= bound) {
    throw Error(ErrorKind::state_space_exceeded,
                "state space exceeds the bound of " + std::to_string(bound) +
                    " states");
  }
  std::size_t id = states.size();
  states.push_back(g);
  edges.emplace_back();
  derived_edges.emplace_back();
  derived.push_back(false);
  index_.emplace(g, id);
  return {id, true};
}

std::size_t StateSpace::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.size();
  return n;
}

std::size_t StateSpace::derived_edge_count() const {
  std::size_t n = 0;
  for (const auto& e : derived_edges) n += e.size();
  return n;
}

std::vector<Transition> StateSpace::transitions() const {
  std::vector<Transition> out;
  const TransitionKind rule = mode == StepMode::labeled
                                  ? TransitionKind::labeled
                                  : TransitionKind::reduction;
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (const auto& e : edges[s]) {
      out.push_back(Transition{states[s], e.label, states[e.target], rule});
    }
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (const auto& e : derived_edges[s]) {
      out.push_back(Transition{states[s], e.label, states[e.target],
                               TransitionKind::derived});
    }
  }
  return out;
}

StateSpace reachable(const std::vector<Configuration>& initials,
                     const Context& ctx, StepMode mode, std::size_t bound) {
  if (bound == 0) {
    throw Error(ErrorKind::invalid_parameter, "state bound must be positive");
  }
  StateSpace space;
  space.mode = mode;
  std::deque<std::size_t> work;
  for (const auto& g : initials) {
    auto [id, fresh] = space.intern(g, bound);
    if (std::find(space.initials.begin(), space.initials.end(), id) ==
        space.initials.end()) {
      space.initials.push_back(id);
    }
    if (fresh) work.push_back(id);
  }
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    Configuration g = space.states[s];
    std::vector<Edge> out;
    for (auto& [label, target] : successors(g, ctx, mode)) {
      auto [id, fresh] = space.intern(target, bound);
      if (fresh) work.push_back(id);
      out.push_back(Edge{std::move(label), id});
    }
    space.edges[s] = std::move(out);
  }
  return space;
}

bool audit_canonical(const StateSpace& space, const ConstraintSystem& sys) {
  for (std::size_t s = 0; s < space.size(); ++s) {
    const auto& g = space.states[s];
    if (!sys.is_canonical(g.store) || !all_canonical(g.process, sys)) {
      return false;
    }
    for (const auto* list : {&space.edges[s], &space.derived_edges[s]}) {
      for (const auto& e : *list) {
        if (!sys.is_canonical(e.label)) return false;
      }
    }
  }
  return true;
}

}  // namespace ccpbisim
