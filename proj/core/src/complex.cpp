// SPDX-License-Identifier: Apache-2.0
#include "pathwl/complex.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "detail/hash.hpp"
#include "pathwl/errors.hpp"

namespace pathwl {
namespace {

std::uint64_t hash_carrier(std::span<const Vertex> s) {
  return detail::hash_span(s);
}

}  // namespace

std::string_view to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::path: return "path";
    case ComplexKind::simplex: return "simplex";
    case ComplexKind::cell: return "cell";
  }
  return "?";
}

std::string_view to_string(BoundaryMode mode) {
  return mode == BoundaryMode::incidence ? "incidence" : "truncation";
}

ComplexKind parse_complex_kind(std::string_view text) {
  if (text == "path") return ComplexKind::path;
  if (text == "simplex") return ComplexKind::simplex;
  if (text == "cell") return ComplexKind::cell;
  throw InputError("unknown complex kind '" + std::string(text) +
                   "' (expected path, simplex or cell)");
}

BoundaryMode parse_boundary_mode(std::string_view text) {
  if (text == "incidence") return BoundaryMode::incidence;
  if (text == "truncation") return BoundaryMode::truncation;
  throw InputError("unknown boundary mode '" + std::string(text) +
                   "' (expected incidence or truncation)");
}

std::vector<Vertex> canonical_carrier(ComplexKind kind, int dim,
                                      std::span<const Vertex> carrier) {
  std::vector<Vertex> out(carrier.begin(), carrier.end());
  if (out.size() < 2) return out;
  if (kind == ComplexKind::path) {
    if (out.front() > out.back()) std::reverse(out.begin(), out.end());
    return out;
  }
  if (kind == ComplexKind::simplex || dim <= 1) {
    std::sort(out.begin(), out.end());
    return out;
  }
  // Ring: rotate the minimum to the front, then pick the direction whose
  // second vertex is smaller.
  auto min_it = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), min_it, out.end());
  if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
  return out;
}

HigherOrderComplex::HigherOrderComplex(ComplexKind kind, SimpleGraph source,
                                       int max_dim, std::vector<Level> levels,
                                       Csr<MemberId> boundary)
    : kind_(kind),
      source_(std::move(source)),
      max_dim_(max_dim),
      levels_(std::move(levels)),
      boundary_(std::move(boundary)) {
  if (max_dim_ < 0) throw InputError("max_dim must be non-negative");
  if (levels_.size() != static_cast<std::size_t>(max_dim_) + 1) {
    throw InputError("expected " + std::to_string(max_dim_ + 1) +
                     " levels, got " + std::to_string(levels_.size()));
  }
  first_id_.assign(1, 0);
  for (const auto &lvl : levels_) first_id_.push_back(first_id_.back() + lvl.size());
  const std::size_t total = first_id_.back();
  if (total > std::numeric_limits<MemberId>::max()) {
    throw CapExceededError("member count exceeds the 32-bit id space",
                           std::numeric_limits<MemberId>::max());
  }
  if (boundary_.size() != total) {
    throw InputError("boundary index has " + std::to_string(boundary_.size()) +
                     " rows for " + std::to_string(total) + " members");
  }
  for (int p = 0; p <= max_dim_; ++p) {
    for (MemberId id = first_id(p); id < end_id(p); ++id) {
      for (Vertex v : carrier(id)) {
        if (v >= source_.order()) {
          throw InputError("member " + std::to_string(id) +
                           " references vertex " + std::to_string(v) +
                           " outside the source graph");
        }
      }
      const auto row = boundary_[id];
      for (std::size_t i = 0; i < row.size(); ++i) {
        const MemberId b = row[i];
        if (b >= total) {
          throw InputError("dangling boundary id " + std::to_string(b) +
                           " on member " + std::to_string(id));
        }
        if (p == 0 || b < first_id(p - 1) || b >= end_id(p - 1)) {
          throw InputError("boundary id " + std::to_string(b) + " of member " +
                           std::to_string(id) + " is not one dimension lower");
        }
        if (i > 0 && row[i - 1] >= b) {
          throw InputError("boundary list of member " + std::to_string(id) +
                           " is not strictly ascending");
        }
      }
    }
  }

  // Transpose. Rows come out ascending because ids are visited in order.
  std::vector<std::size_t> degree(total + 1, 0);
  for (MemberId b : boundary_.values) ++degree[b + 1];
  coboundary_.offsets.assign(total + 1, 0);
  for (std::size_t i = 0; i < total; ++i)
    coboundary_.offsets[i + 1] = coboundary_.offsets[i] + degree[i + 1];
  coboundary_.values.resize(boundary_.values.size());
  std::vector<std::size_t> cursor(coboundary_.offsets.begin(),
                                  coboundary_.offsets.end() - 1);
  for (MemberId id = 0; id < total; ++id)
    for (MemberId b : boundary_[id]) coboundary_.values[cursor[b]++] = id;

  build_lookup();
}

std::size_t HigherOrderComplex::count(int dim) const {
  if (dim < 0 || dim > max_dim_) return 0;
  return levels_[dim].size();
}

std::vector<std::size_t> HigherOrderComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto &lvl : levels_) out.push_back(lvl.size());
  return out;
}

int HigherOrderComplex::dim_of(MemberId id) const {
  auto it = std::upper_bound(first_id_.begin(), first_id_.end(),
                             static_cast<std::size_t>(id));
  return static_cast<int>(it - first_id_.begin()) - 1;
}

std::span<const Vertex> HigherOrderComplex::carrier(MemberId id) const {
  const int p = dim_of(id);
  return levels_[p][id - first_id_[p]];
}

void HigherOrderComplex::build_lookup() {
  lookup_.assign(levels_.size(), {});
  for (std::size_t p = 0; p < levels_.size(); ++p) {
    const auto &lvl = levels_[p];
    auto &table = lookup_[p];
    const std::size_t cap = std::bit_ceil(std::max<std::size_t>(8, lvl.size() * 2));
    table.slots.assign(cap, 0);
    table.mask = cap - 1;
    for (std::size_t i = 0; i < lvl.size(); ++i) {
      std::size_t slot = hash_carrier(lvl[i]) & table.mask;
      while (table.slots[slot] != 0) slot = (slot + 1) & table.mask;
      table.slots[slot] = static_cast<MemberId>(i + 1);
    }
  }
}

std::optional<MemberId> HigherOrderComplex::find(std::span<const Vertex> carrier) const {
  if (carrier.empty()) return std::nullopt;
  const int p = kind_ == ComplexKind::cell && carrier.size() > 2
                    ? 2
                    : static_cast<int>(carrier.size()) - 1;
  if (p > max_dim_) return std::nullopt;
  const auto key = canonical_carrier(kind_, p, carrier);
  const auto &lvl = levels_[p];
  const auto &table = lookup_[p];
  std::size_t slot = hash_carrier(key) & table.mask;
  while (table.slots[slot] != 0) {
    const std::size_t local = table.slots[slot] - 1;
    const auto cand = lvl[local];
    if (std::equal(cand.begin(), cand.end(), key.begin(), key.end()))
      return static_cast<MemberId>(first_id_[p] + local);
    slot = (slot + 1) & table.mask;
  }
  return std::nullopt;
}

Csr<AdjacentEntry> HigherOrderComplex::upper_adjacency() const {
  Csr<AdjacentEntry> out;
  std::vector<AdjacentEntry> row;
  for (MemberId id = 0; id < member_count(); ++id) {
    row.clear();
    for_each_upper(id, [&](MemberId tau, MemberId delta) { row.push_back({tau, delta}); });
    std::sort(row.begin(), row.end());
    out.values.insert(out.values.end(), row.begin(), row.end());
    out.push_row();
  }
  return out;
}

Csr<AdjacentEntry> HigherOrderComplex::lower_adjacency() const {
  Csr<AdjacentEntry> out;
  std::vector<AdjacentEntry> row;
  for (MemberId id = 0; id < member_count(); ++id) {
    row.clear();
    for_each_lower(id, [&](MemberId tau, MemberId delta) { row.push_back({tau, delta}); });
    std::sort(row.begin(), row.end());
    out.values.insert(out.values.end(), row.begin(), row.end());
    out.push_row();
  }
  return out;
}

}  // namespace pathwl
