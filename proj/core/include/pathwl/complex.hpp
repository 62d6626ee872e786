// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pathwl/graph.hpp"

namespace pathwl {

using MemberId = std::uint32_t;

enum class ComplexKind : std::uint8_t { path, simplex, cell };

/// Which deletions of a p-path count as boundary members. `incidence` keeps
/// every single-vertex deletion that is still a walk in the graph (both end
/// truncations plus interior deletions bridged by an edge); `truncation` keeps
/// only the two end truncations.
enum class BoundaryMode : std::uint8_t { incidence, truncation };

std::string_view to_string(ComplexKind kind);
std::string_view to_string(BoundaryMode mode);
ComplexKind parse_complex_kind(std::string_view text);
BoundaryMode parse_boundary_mode(std::string_view text);

struct LiftOptions {
  std::size_t member_cap = 50'000'000;
  BoundaryMode boundary_mode = BoundaryMode::incidence;
};

/// Compressed list-of-lists.
template <class T>
struct Csr {
  std::vector<std::size_t> offsets{0};
  std::vector<T> values;

  std::size_t size() const noexcept { return offsets.size() - 1; }
  std::span<const T> operator[](std::size_t i) const {
    return {values.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  void push_row() { offsets.push_back(values.size()); }

  friend bool operator==(const Csr &, const Csr &) = default;
};

/// One carrier per member of a single dimension, stored back to back.
struct Level {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> offsets{0};

  std::size_t size() const noexcept { return offsets.size() - 1; }
  std::span<const Vertex> operator[](std::size_t i) const {
    return {vertices.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  void push(std::span<const Vertex> carrier) {
    vertices.insert(vertices.end(), carrier.begin(), carrier.end());
    offsets.push_back(vertices.size());
  }

  friend bool operator==(const Level &, const Level &) = default;
};

/// Upper- or lower-adjacency entry: neighbour `tau` together with the shared
/// co-boundary (upper) or boundary (lower) member `witness` that relates it.
struct AdjacentEntry {
  MemberId tau;
  MemberId witness;

  friend auto operator<=>(const AdjacentEntry &,
                          const AdjacentEntry &) = default;
};

/// Canonical form of a carrier for a given kind and dimension: paths are
/// oriented so the first vertex is smaller than the last, simplices and
/// dimension <= 1 cells are sorted, rings start at their smallest vertex and
/// continue toward the smaller of its two ring neighbours.
std::vector<Vertex> canonical_carrier(ComplexKind kind, int dim,
                                      std::span<const Vertex> carrier);

/// Members of every dimension plus boundary incidences, for path, clique
/// (simplicial) and ring (cell) liftings.
///
/// Member ids are global: dimension 0 occupies [0, count(0)), dimension 1
/// follows, and so on. Boundary lists hold ids one dimension lower, sorted
/// ascending; the co-boundary index is their exact transpose.
class HigherOrderComplex {
 public:
  HigherOrderComplex() = default;

  /// Assembles a complex from explicit levels and boundary lists. Validates
  /// that boundary ids exist and live exactly one dimension lower; throws
  /// InputError otherwise.
  HigherOrderComplex(ComplexKind kind, SimpleGraph source, int max_dim,
                     std::vector<Level> levels, Csr<MemberId> boundary);

  ComplexKind kind() const noexcept { return kind_; }
  const SimpleGraph &source() const noexcept { return source_; }
  int max_dim() const noexcept { return max_dim_; }

  std::size_t member_count() const noexcept { return first_id_.back(); }
  /// Number of members at `dim`; zero above max_dim.
  std::size_t count(int dim) const;
  std::vector<std::size_t> counts() const;
  MemberId first_id(int dim) const { return static_cast<MemberId>(first_id_[dim]); }
  MemberId end_id(int dim) const { return static_cast<MemberId>(first_id_[dim + 1]); }
  int dim_of(MemberId id) const;

  std::span<const Vertex> carrier(MemberId id) const;
  std::span<const MemberId> boundary(MemberId id) const { return boundary_[id]; }
  std::span<const MemberId> coboundary(MemberId id) const { return coboundary_[id]; }

  const Level &level(int dim) const { return levels_[dim]; }
  const Csr<MemberId> &boundary_index() const noexcept { return boundary_; }

  /// Looks a carrier up after canonicalising it.
  std::optional<MemberId> find(std::span<const Vertex> carrier) const;

  /// Calls f(tau, delta) for every tau != sigma sharing co-boundary delta
  /// with sigma, in ascending (delta, tau) order.
  template <class F>
  void for_each_upper(MemberId sigma, F &&f) const {
    for (MemberId delta : coboundary_[sigma])
      for (MemberId tau : boundary_[delta])
        if (tau != sigma) f(tau, delta);
  }

  /// Calls f(tau, delta) for every tau != sigma sharing boundary delta with
  /// sigma, in ascending (delta, tau) order.
  template <class F>
  void for_each_lower(MemberId sigma, F &&f) const {
    for (MemberId delta : boundary_[sigma])
      for (MemberId tau : coboundary_[delta])
        if (tau != sigma) f(tau, delta);
  }

  /// Materialised adjacency indices; each row sorted by (tau, witness).
  Csr<AdjacentEntry> upper_adjacency() const;
  Csr<AdjacentEntry> lower_adjacency() const;

  /// Structural equality: kind, vertex count, max_dim, carriers in id order
  /// and boundary lists.
  friend bool operator==(const HigherOrderComplex &a,
                         const HigherOrderComplex &b) {
    return a.kind_ == b.kind_ && a.source_.order() == b.source_.order() &&
           a.max_dim_ == b.max_dim_ && a.levels_ == b.levels_ &&
           a.boundary_ == b.boundary_;
  }

 private:
  struct LookupTable {
    std::vector<MemberId> slots;  // local index + 1, 0 = empty
    std::size_t mask = 0;
  };

  void build_lookup();

  ComplexKind kind_ = ComplexKind::path;
  SimpleGraph source_;
  int max_dim_ = 0;
  std::vector<Level> levels_;
  std::vector<std::size_t> first_id_{0};
  Csr<MemberId> boundary_;
  Csr<MemberId> coboundary_;
  std::vector<LookupTable> lookup_;
};

}  // namespace pathwl
