// SPDX-License-Identifier: Apache-2.0
#include "pathwl/cyclic_family.hpp"

#include <algorithm>

#include "pathwl/errors.hpp"

namespace pathwl {

CyclicFamily cyclic_families(std::span<const Vertex> ring) {
  if (ring.size() < 3) throw InputError("a ring needs at least 3 vertices");
  std::vector<Vertex> sorted(ring.begin(), ring.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("ring vertices must be distinct");

  const std::size_t size = ring.size();
  CyclicFamily fam;
  fam.cell_seq.assign(ring.begin(), ring.end());
  fam.families.resize(size);
  std::vector<Vertex> window;
  for (std::size_t p = 0; p < size; ++p) {
    auto &fp = fam.families[p];
    for (std::size_t start = 0; start < size; ++start) {
      window.clear();
      for (std::size_t i = 0; i <= p; ++i) window.push_back(ring[(start + i) % size]);
      fp.push_back(canonical_carrier(ComplexKind::path, static_cast<int>(p), window));
    }
    std::sort(fp.begin(), fp.end());
    fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
  }
  return fam;
}

CyclicFamily cyclic_families(const HigherOrderComplex &c, MemberId cell) {
  if (c.kind() != ComplexKind::cell || cell >= c.member_count() || c.dim_of(cell) != 2)
    throw InputError("cyclic families need a 2-cell of a ring complex");
  return cyclic_families(c.carrier(cell));
}

std::vector<MemberId> family_members(const CyclicFamily &fam, int p,
                                     const HigherOrderComplex &paths) {
  if (paths.kind() != ComplexKind::path)
    throw InputError("family members are looked up in a path complex");
  std::vector<MemberId> out;
  for (const auto &seq : fam.family(p)) {
    auto id = paths.find(seq);
    if (!id) throw InputError("path complex lacks a family member at dimension " + std::to_string(p));
    out.push_back(*id);
  }
  return out;
}

}  // namespace pathwl
