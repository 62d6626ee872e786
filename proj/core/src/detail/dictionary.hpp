// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "detail/hash.hpp"

namespace pathwl::detail {

// Injective map from integer sequences to dense ids 0, 1, 2, ... in
// first-seen order. Keys live back to back in one arena.
class SequenceDictionary {
 public:
  std::uint32_t intern(std::span<const std::uint32_t> key) {
    if ((entries_.size() + 1) * 2 > slots_.size()) grow();
    const std::uint64_t h = hash_span(key);
    std::size_t slot = h & mask_;
    while (slots_[slot] != 0) {
      const Entry &e = entries_[slots_[slot] - 1];
      if (e.hash == h && e.length == key.size() &&
          std::equal(key.begin(), key.end(), arena_.begin() + e.offset))
        return slots_[slot] - 1;
      slot = (slot + 1) & mask_;
    }
    const auto id = static_cast<std::uint32_t>(entries_.size());
    entries_.push_back({h, arena_.size(), key.size()});
    arena_.insert(arena_.end(), key.begin(), key.end());
    slots_[slot] = id + 1;
    return id;
  }

  std::size_t size() const noexcept { return entries_.size(); }

  void clear() {
    entries_.clear();
    arena_.clear();
    std::fill(slots_.begin(), slots_.end(), 0);
  }

 private:
  struct Entry {
    std::uint64_t hash;
    std::size_t offset;
    std::size_t length;
  };

  void grow() {
    const std::size_t cap = std::max<std::size_t>(64, slots_.size() * 2);
    slots_.assign(cap, 0);
    mask_ = cap - 1;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      std::size_t slot = entries_[i].hash & mask_;
      while (slots_[slot] != 0) slot = (slot + 1) & mask_;
      slots_[slot] = static_cast<std::uint32_t>(i + 1);
    }
  }

  std::vector<Entry> entries_;
  std::vector<std::uint32_t> arena_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

}  // namespace pathwl::detail
