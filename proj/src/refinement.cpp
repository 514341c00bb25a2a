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

#include "ccpbisim/refinement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "ccpbisim/error.hpp"

namespace ccpbisim {

namespace {

// (label, target block), sorted and unique.
using Signature = std::vector<std::pair<Constraint, std::size_t>>;

void normalize(Signature& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool subset(const Signature& a, const Signature& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::size_t> visit_order(std::size_t n, const RefineOptions& opts) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Partition initial_partition_barbs(const StateSpace& space) {
  std::map<Constraint, std::size_t> id_of;
  std::vector<std::size_t> key(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    key[s] = id_of.emplace(space.states[s].store, id_of.size()).first->second;
  }
  return Partition::from_keys(key);
}

Partition refine_F(const Partition& part, const StateSpace& space,
                   const RefineOptions& opts) {
  std::map<std::pair<std::size_t, Signature>, std::size_t> id_of;
  std::vector<std::size_t> key(space.size());
  for (std::size_t s : visit_order(space.size(), opts)) {
    Signature sig;
    for (const auto& e : space.edges[s]) {
      sig.emplace_back(e.label, part.block_of(e.target));
    }
    normalize(sig);
    auto k = std::make_pair(part.block_of(s), std::move(sig));
    key[s] = id_of.emplace(std::move(k), id_of.size()).first->second;
  }
  return Partition::from_keys(key);
}

std::vector<std::vector<bool>> redundancy(const Partition& part,
                                          const StateSpace& space,
                                          const ConstraintSystem& sys) {
  std::vector<std::vector<bool>> out(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    out[s].reserve(space.edges[s].size());
    for (const auto& e : space.edges[s]) {
      out[s].push_back(is_redundant(space, s, e, part, sys));
    }
  }
  return out;
}

namespace {

Partition refine_IR_with(const Partition& part, const StateSpace& space,
                         const std::vector<std::vector<bool>>& redundant,
                         const RefineOptions& opts) {
  const std::size_t n = space.size();
  std::vector<Signature> all(n), irr(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto& edges = space.edges[s];
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto item = std::make_pair(edges[k].label, part.block_of(edges[k].target));
      all[s].push_back(item);
      if (!redundant[s][k]) irr[s].push_back(std::move(item));
    }
    normalize(all[s]);
    normalize(irr[s]);
  }

  UnionFind uf(n);
  const auto order = visit_order(n, opts);
  for (const auto& block : part.blocks()) {
    // States with equal signatures are related; compare one per class.
    std::map<std::pair<Signature, Signature>, std::size_t> rep;
    std::vector<std::size_t> reps;
    std::vector<std::size_t> members(block);
    if (opts.shuffle_seed) {
      std::vector<std::size_t> pos(n);
      for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
      std::sort(members.begin(), members.end(),
                [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    }
    for (std::size_t s : members) {
      auto [it, fresh] = rep.emplace(std::make_pair(irr[s], all[s]), s);
      if (fresh) {
        reps.push_back(s);
      } else {
        uf.unite(it->second, s);
      }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        std::size_t a = reps[i], b = reps[j];
        if (subset(irr[a], all[b]) && subset(irr[b], all[a])) uf.unite(a, b);
      }
    }
  }
  std::vector<std::size_t> key(n);
  for (std::size_t s = 0; s < n; ++s) key[s] = uf.find(s);
  return Partition::from_keys(key);
}

}  // namespace

Partition refine_IR(const Partition& part, const StateSpace& space,
                    const ConstraintSystem& sys, const RefineOptions& opts) {
  return refine_IR_with(part, space, redundancy(part, space, sys), opts);
}

RefinementResult ccp_partition_refine(StateSpace space,
                                      const ConstraintSystem& sys,
                                      const RefineOptions& opts) {
  RefinementResult r;
  Partition current = initial_partition_barbs(space);
  r.trace.partitions.push_back(current);
  // Each productive round adds a block, so this many rounds always suffice.
  for (std::size_t round = 0; round <= space.size(); ++round) {
    auto red = redundancy(current, space, sys);
    Partition next = refine_IR_with(current, space, red, opts);
    r.trace.redundant.push_back(std::move(red));
    r.trace.partitions.push_back(next);
    if (next == current) break;
    current = std::move(next);
  }
  r.partition = std::move(current);
  r.space = std::move(space);
  return r;
}

RefinementResult ccp_partition_refine(const std::vector<Configuration>& initials,
                                      const Context& ctx, std::size_t bound,
                                      const RefineOptions& opts) {
  return ccp_partition_refine(closure(initials, ctx, bound), ctx.sys, opts);
}

bool sb_equiv(const Configuration& a, const Configuration& b,
              const Context& ctx, std::size_t bound) {
  RefinementResult r = ccp_partition_refine({a, b}, ctx, bound);
  auto ia = r.space.find(a);
  auto ib = r.space.find(b);
  return r.partition.same_block(*ia, *ib);
}

Partition std_partition_refine(const StateSpace& space, const Partition& init,
                               const RefineOptions& opts) {
  Partition current = init;
  while (true) {
    Partition next = refine_F(current, space, opts);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace ccpbisim
