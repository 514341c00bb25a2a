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

#include "ccpbisim/derivation.hpp"

#include <algorithm>
#include <deque>

#include "ccpbisim/error.hpp"

namespace ccpbisim {

bool derives_def(const Transition& t1, const Transition& t2,
                 const ConstraintSystem& sys, std::size_t threshold) {
  if (t1.source != t2.source) return false;
  if (t1.target.process != t2.target.process) return false;
  if (t1.label == t2.label) return false;
  for (const auto& e : sys.enumerate_con0(threshold)) {
    if (sys.lub(t1.label, e) == t2.label &&
        sys.lub(t1.target.store, e) == t2.target.store) {
      return true;
    }
  }
  return false;
}

bool derives(const Transition& t1, const Transition& t2,
             const ConstraintSystem& sys) {
  if (t1.source != t2.source) return false;
  if (t1.target.process != t2.target.process) return false;
  return sys.lt(t1.label, t2.label) &&
         t2.target.store == sys.lub(t1.target.store, t2.label);
}

Configuration derived_target(const Transition& t1, const Constraint& beta,
                             const ConstraintSystem& sys) {
  if (!sys.lt(t1.label, beta)) {
    throw Error(ErrorKind::not_dominating,
                "label " + sys.to_string(t1.label) + " is not strictly below " +
                    sys.to_string(beta));
  }
  return Configuration{t1.target.process, sys.lub(t1.target.store, beta)};
}

bool is_redundant(const StateSpace& space, std::size_t source, const Edge& e,
                  const Partition& part, const ConstraintSystem& sys) {
  for (const auto& t1 : space.edges[source]) {
    if (!sys.lt(t1.label, e.label)) continue;
    const Configuration& g1 = space.states[t1.target];
    Configuration g3{g1.process, sys.lub(g1.store, e.label)};
    auto id = space.find(g3);
    if (!id) {
      throw Error(ErrorKind::missing_derived_state,
                  "derived state " + to_string(g3, sys) + " is not explored");
    }
    if (part.same_block(*id, e.target)) return true;
  }
  return false;
}

bool is_redundant(const Transition& t, const Partition& part,
                  const StateSpace& space, const ConstraintSystem& sys) {
  auto s = space.find(t.source);
  auto d = space.find(t.target);
  if (!s || !d) {
    throw Error(ErrorKind::missing_derived_state,
                "transition endpoints are not in the state space");
  }
  return is_redundant(space, *s, Edge{t.label, *d}, part, sys);
}

StateSpace closure(const std::vector<Configuration>& initials,
                   const Context& ctx, std::size_t bound) {
  if (bound == 0) {
    throw Error(ErrorKind::invalid_parameter, "state bound must be positive");
  }
  const auto& sys = ctx.sys;
  StateSpace space;
  space.mode = StepMode::labeled;
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
    for (auto& [label, target] : successors(g, ctx, StepMode::labeled)) {
      auto [id, fresh] = space.intern(target, bound);
      if (fresh) work.push_back(id);
      out.push_back(Edge{std::move(label), id});
    }
    std::vector<Edge> extra;
    for (const auto& t1 : out) {
      for (const auto& t2 : out) {
        if (!sys.lt(t1.label, t2.label)) continue;
        const Configuration& g1 = space.states[t1.target];
        Configuration g3{g1.process, sys.lub(g1.store, t2.label)};
        auto [id, fresh] = space.intern(g3, bound);
        if (fresh) work.push_back(id);
        Edge d{t2.label, id};
        if (std::find(out.begin(), out.end(), d) == out.end() &&
            std::find(extra.begin(), extra.end(), d) == extra.end()) {
          extra.push_back(std::move(d));
        }
      }
    }
    std::sort(extra.begin(), extra.end(), [](const Edge& a, const Edge& b) {
      if (a.label != b.label) return a.label < b.label;
      return a.target < b.target;
    });
    space.edges[s] = std::move(out);
    space.derived_edges[s] = std::move(extra);
  }

  std::vector<bool> seen(space.size(), false);
  std::deque<std::size_t> bfs(space.initials.begin(), space.initials.end());
  for (std::size_t s : space.initials) seen[s] = true;
  while (!bfs.empty()) {
    std::size_t s = bfs.front();
    bfs.pop_front();
    for (const auto& e : space.edges[s]) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        bfs.push_back(e.target);
      }
    }
  }
  for (std::size_t s = 0; s < space.size(); ++s) space.derived[s] = !seen[s];
  return space;
}

}  // namespace ccpbisim
