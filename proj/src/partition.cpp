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

#include "ccpbisim/partition.hpp"

#include <unordered_map>

namespace ccpbisim {

Partition Partition::from_keys(const std::vector<std::size_t>& key) {
  Partition p;
  p.block_of_.resize(key.size());
  std::unordered_map<std::size_t, std::size_t> id_of;
  for (std::size_t s = 0; s < key.size(); ++s) {
    auto [it, fresh] = id_of.emplace(key[s], p.blocks_.size());
    if (fresh) p.blocks_.emplace_back();
    p.block_of_[s] = it->second;
    p.blocks_[it->second].push_back(s);
  }
  return p;
}

Partition Partition::single_block(std::size_t n) {
  return from_keys(std::vector<std::size_t>(n, 0));
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> key(n);
  for (std::size_t s = 0; s < n; ++s) key[s] = s;
  return from_keys(key);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  for (const auto& b : blocks_) {
    for (std::size_t s : b) {
      if (coarser.block_of_[s] != coarser.block_of_[b.front()]) return false;
    }
  }
  return true;
}

Partition Partition::restrict(const std::vector<std::size_t>& states) const {
  std::vector<std::size_t> key;
  key.reserve(states.size());
  for (std::size_t s : states) key.push_back(block_of_.at(s));
  return from_keys(key);
}

}  // namespace ccpbisim
