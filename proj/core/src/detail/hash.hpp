// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

namespace pathwl::detail {

// splitmix64 finaliser.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

template <class T>
std::uint64_t hash_span(std::span<const T> s) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull + s.size();
  for (T v : s) h = mix64(h ^ static_cast<std::uint64_t>(v));
  return h;
}

}  // namespace pathwl::detail
