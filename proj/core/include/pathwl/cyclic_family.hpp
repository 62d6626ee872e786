// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "pathwl/complex.hpp"

namespace pathwl {

/// Cyclic-shifting families of a ring of size n+1: F_p holds the canonical
/// p-paths obtained as windows of p+1 consecutive vertices over every
/// rotation of the ring, for p = 0..n.
struct CyclicFamily {
  std::vector<Vertex> cell_seq;  // the ring written as an elementary n-path
  std::vector<std::vector<std::vector<Vertex>>> families;  // [p] sorted, unique

  int top_dim() const { return static_cast<int>(cell_seq.size()) - 1; }
  const std::vector<std::vector<Vertex>> &family(int p) const { return families[p]; }
};

/// Families of the ring traversed in the given vertex order. Throws
/// InputError for fewer than 3 vertices or repeated vertices.
CyclicFamily cyclic_families(std::span<const Vertex> ring);

/// Families of a 2-cell of a ring complex. Throws InputError if `cell` is not
/// a dimension-2 member of a cell-kind complex.
CyclicFamily cyclic_families(const HigherOrderComplex &c, MemberId cell);

/// Member ids of F_p inside a path complex, in F_p order. Throws InputError
/// when a path is missing (the complex was lifted below dimension p).
std::vector<MemberId> family_members(const CyclicFamily &fam, int p,
                                     const HigherOrderComplex &paths);

}  // namespace pathwl
