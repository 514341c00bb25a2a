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

#include "ccpbisim/oracle.hpp"

#include <deque>
#include <functional>
#include <unordered_map>

#include "ccpbisim/error.hpp"

namespace ccpbisim {

namespace {

struct Graph {
  std::vector<Configuration> states;
  std::vector<std::vector<std::pair<Constraint, std::size_t>>> out;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
  std::deque<std::size_t> work;
  std::size_t bound;

  explicit Graph(std::size_t b) : bound(b) {}

  std::size_t add(const Configuration& g) {
    auto it = index.find(g);
    if (it != index.end()) return it->second;
    if (states.size() >= bound) {
      throw Error(ErrorKind::state_space_exceeded,
                  "oracle universe exceeds the bound of " +
                      std::to_string(bound) + " states");
    }
    std::size_t id = states.size();
    states.push_back(g);
    out.emplace_back();
    index.emplace(g, id);
    work.push_back(id);
    return id;
  }
};

using Relation = std::vector<std::vector<char>>;

Relation same_store(const Graph& g) {
  const std::size_t n = g.states.size();
  Relation r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r[i][j] = g.states[i].store == g.states[j].store;
    }
  }
  return r;
}

// Does every move of i have an equally labeled answer from j inside r?
bool answered(const Graph& g, const Relation& r, std::size_t i, std::size_t j,
              const std::vector<char>* must = nullptr) {
  for (std::size_t k = 0; k < g.out[i].size(); ++k) {
    if (must && !(*must)[k]) continue;
    const auto& [label, ti] = g.out[i][k];
    bool found = false;
    for (const auto& [label2, tj] : g.out[j]) {
      if (label2 == label && r[ti][tj]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Removes pairs failing `keep` until none fails.
void prune(Relation& r, const std::function<bool(std::size_t, std::size_t)>& keep) {
  const std::size_t n = r.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (r[i][j] && !keep(i, j)) {
          r[i][j] = r[j][i] = 0;
          changed = true;
        }
      }
    }
  }
}

void explore(Graph& g, const Context& ctx, StepMode mode) {
  while (!g.work.empty()) {
    std::size_t s = g.work.front();
    g.work.pop_front();
    Configuration c = g.states[s];
    for (auto& [label, t] : successors(c, ctx, mode)) {
      std::size_t id = g.add(t);
      g.out[s].emplace_back(std::move(label), id);
    }
  }
}

}  // namespace

bool sb_oracle(const Configuration& a, const Configuration& b,
               const Context& ctx, std::size_t bound) {
  const auto& sys = ctx.sys;
  const auto con0 = sys.enumerate_con0(ctx.enabler_threshold);
  Graph g(bound);
  std::vector<std::vector<std::size_t>> shift;
  std::size_t ia = g.add(a);
  std::size_t ib = g.add(b);
  while (!g.work.empty()) {
    std::size_t s = g.work.front();
    g.work.pop_front();
    Configuration c = g.states[s];
    for (auto& r : reduce(c, ctx)) {
      std::size_t id = g.add(r);
      g.out[s].emplace_back(Constraint(), id);
    }
    std::vector<std::size_t> sh;
    sh.reserve(con0.size());
    for (const auto& e : con0) {
      sh.push_back(g.add(Configuration{c.process, sys.lub(c.store, e)}));
    }
    if (shift.size() <= s) shift.resize(s + 1);
    shift[s] = std::move(sh);
  }
  Relation r = same_store(g);
  prune(r, [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < con0.size(); ++k) {
      if (!r[shift[i][k]][shift[j][k]]) return false;
    }
    return answered(g, r, i, j) && answered(g, r, j, i);
  });
  return r[ia][ib];
}

bool barbed_bisim(const Configuration& a, const Configuration& b,
                  const Context& ctx, std::size_t bound) {
  Graph g(bound);
  std::size_t ia = g.add(a);
  std::size_t ib = g.add(b);
  explore(g, ctx, StepMode::reduction);
  Relation r = same_store(g);
  prune(r, [&](std::size_t i, std::size_t j) {
    return answered(g, r, i, j) && answered(g, r, j, i);
  });
  return r[ia][ib];
}

bool syntactic_bisim(const Configuration& a, const Configuration& b,
                     const Context& ctx, std::size_t bound) {
  Graph g(bound);
  std::size_t ia = g.add(a);
  std::size_t ib = g.add(b);
  explore(g, ctx, StepMode::labeled);
  Relation r = same_store(g);
  prune(r, [&](std::size_t i, std::size_t j) {
    return answered(g, r, i, j) && answered(g, r, j, i);
  });
  return r[ia][ib];
}

bool irredundant_gfp(const Configuration& a, const Configuration& b,
                     const Context& ctx, std::size_t bound) {
  const auto& sys = ctx.sys;
  const auto con0 = sys.enumerate_con0(ctx.enabler_threshold);
  Graph g(bound);
  // cand[s][k]: every state that some other move of s derives with the label
  // of move k, found by searching for the witness e.
  std::vector<std::vector<std::vector<std::size_t>>> cand;
  std::size_t ia = g.add(a);
  std::size_t ib = g.add(b);
  while (!g.work.empty()) {
    std::size_t s = g.work.front();
    g.work.pop_front();
    Configuration c = g.states[s];
    for (auto& [label, t] : successors(c, ctx, StepMode::labeled)) {
      std::size_t id = g.add(t);
      g.out[s].emplace_back(std::move(label), id);
    }
    const auto moves = g.out[s];
    std::vector<std::vector<std::size_t>> per_move(moves.size());
    for (std::size_t k = 0; k < moves.size(); ++k) {
      const Constraint& beta = moves[k].first;
      for (const auto& [alpha, t1] : moves) {
        if (alpha == beta) continue;
        Configuration g1 = g.states[t1];
        for (const auto& e : con0) {
          if (sys.lub(alpha, e) != beta) continue;
          std::size_t id =
              g.add(Configuration{g1.process, sys.lub(g1.store, e)});
          per_move[k].push_back(id);
        }
      }
    }
    if (cand.size() <= s) cand.resize(s + 1);
    cand[s] = std::move(per_move);
  }
  Relation r = same_store(g);
  auto irredundant = [&](std::size_t s) {
    std::vector<char> out(g.out[s].size(), 1);
    for (std::size_t k = 0; k < out.size(); ++k) {
      std::size_t target = g.out[s][k].second;
      for (std::size_t c : cand[s][k]) {
        if (r[c][target]) {
          out[k] = 0;
          break;
        }
      }
    }
    return out;
  };
  prune(r, [&](std::size_t i, std::size_t j) {
    auto mi = irredundant(i);
    auto mj = irredundant(j);
    return answered(g, r, i, j, &mi) && answered(g, r, j, i, &mj);
  });
  return r[ia][ib];
}

}  // namespace ccpbisim
