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

#ifndef CCPBISIM_PARTITION_HPP_
#define CCPBISIM_PARTITION_HPP_

#include <cstddef>
#include <vector>

namespace ccpbisim {

/// A partition of the state ids 0..n-1. Always kept normalized: states
/// ascend inside a block and blocks are numbered by their least state, so
/// two partitions are equal iff they have the same blocks.
class Partition {
 public:
  Partition() = default;

  /// Groups states by equal key; keys are arbitrary integers.
  static Partition from_keys(const std::vector<std::size_t>& key);
  static Partition single_block(std::size_t n);
  static Partition discrete(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_of(std::size_t state) const { return block_of_.at(state); }
  const std::vector<std::size_t>& block_ids() const noexcept {
    return block_of_;
  }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept {
    return blocks_;
  }
  bool same_block(std::size_t a, std::size_t b) const {
    return block_of_.at(a) == block_of_.at(b);
  }

  /// Every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  /// Restriction to the given states, renumbered 0..k-1 in the given order.
  Partition restrict(const std::vector<std::size_t>& states) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<std::size_t>> blocks_;
};

}  // namespace ccpbisim

#endif  // CCPBISIM_PARTITION_HPP_
