// SPDX-License-Identifier: Apache-2.0
#include "pathwl/lift.hpp"

#include <algorithm>
#include <string>

#include "pathwl/errors.hpp"

namespace pathwl {
namespace {

class CapGuard {
 public:
  explicit CapGuard(std::size_t cap) : cap_(cap) {}

  void add(std::size_t k = 1) {
    total_ += k;
    if (total_ > cap_) {
      throw CapExceededError("lifting exceeds the member cap of " +
                                 std::to_string(cap_) + " members",
                             cap_);
    }
  }

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
};

std::vector<Level> vertex_and_edge_levels(const SimpleGraph &g, int max_dim,
                                          CapGuard &guard) {
  std::vector<Level> levels(static_cast<std::size_t>(max_dim) + 1);
  guard.add(g.order());
  for (Vertex v = 0; v < g.order(); ++v) levels[0].push(std::span(&v, 1));
  if (max_dim >= 1) {
    guard.add(g.size());
    for (auto [u, v] : g.edges()) {
      const Vertex e[2] = {u, v};
      levels[1].push(e);
    }
  }
  return levels;
}

// Simple-path DFS; paths are recorded when their last vertex exceeds the start.
class PathEnumerator {
 public:
  PathEnumerator(const SimpleGraph &g, int max_dim, std::vector<Level> &levels,
                 CapGuard &guard)
      : g_(g), max_dim_(max_dim), levels_(levels), guard_(guard),
        on_path_(g.order(), 0) {}

  void run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      guard_.add();
      levels_[0].push(std::span(&s, 1));
      if (max_dim_ == 0) continue;
      stack_.assign(1, s);
      on_path_[s] = 1;
      extend(s);
      on_path_[s] = 0;
    }
  }

 private:
  void extend(Vertex start) {
    const Vertex tail = stack_.back();
    for (Vertex w : g_.neighbors(tail)) {
      if (on_path_[w]) continue;
      stack_.push_back(w);
      const int p = static_cast<int>(stack_.size()) - 1;
      if (w > start) {
        guard_.add();
        levels_[p].push(stack_);
      }
      if (p < max_dim_) {
        on_path_[w] = 1;
        extend(start);
        on_path_[w] = 0;
      }
      stack_.pop_back();
    }
  }

  const SimpleGraph &g_;
  int max_dim_;
  std::vector<Level> &levels_;
  CapGuard &guard_;
  std::vector<Vertex> stack_;
  std::vector<char> on_path_;
};

// Assembles boundary lists by looking every candidate face up in the complex
// built so far. The complex is first constructed without boundaries so its
// lookup tables can be used.
template <class FaceFn>
HigherOrderComplex assemble(ComplexKind kind, const SimpleGraph &g, int max_dim,
                            std::vector<Level> levels, FaceFn &&faces) {
  std::vector<Level> copy = levels;
  Csr<MemberId> empty;
  std::size_t total = 0;
  for (const auto &lvl : levels) total += lvl.size();
  empty.offsets.assign(total + 1, 0);
  const HigherOrderComplex skeleton(kind, g, max_dim, std::move(copy), std::move(empty));

  Csr<MemberId> boundary;
  boundary.offsets.reserve(total + 1);
  std::vector<MemberId> row;
  std::vector<Vertex> scratch;
  for (int p = 0; p <= max_dim; ++p) {
    for (std::size_t i = 0; i < levels[p].size(); ++i) {
      row.clear();
      if (p > 0) {
        faces(p, levels[p][i], scratch, [&](std::span<const Vertex> face) {
          auto id = skeleton.find(face);
          if (!id) {
            throw Error("internal: boundary face missing from lifted complex");
          }
          row.push_back(*id);
        });
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
      }
      boundary.values.insert(boundary.values.end(), row.begin(), row.end());
      boundary.push_row();
    }
  }
  return HigherOrderComplex(kind, g, max_dim, std::move(levels), std::move(boundary));
}

}  // namespace

HigherOrderComplex lift_path_complex(const SimpleGraph &g, int max_dim,
                                     const LiftOptions &options) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  CapGuard guard(options.member_cap);
  std::vector<Level> levels(static_cast<std::size_t>(max_dim) + 1);
  PathEnumerator(g, max_dim, levels, guard).run();

  const bool interior = options.boundary_mode == BoundaryMode::incidence;
  return assemble(ComplexKind::path, g, max_dim, std::move(levels),
                  [&](int p, std::span<const Vertex> seq, std::vector<Vertex> &face,
                      auto &&emit) {
                    for (int q = 0; q <= p; ++q) {
                      const bool end = q == 0 || q == p;
                      if (!end && (!interior || !g.adjacent(seq[q - 1], seq[q + 1])))
                        continue;
                      face.clear();
                      for (int i = 0; i <= p; ++i)
                        if (i != q) face.push_back(seq[i]);
                      emit(face);
                    }
                  });
}

HigherOrderComplex lift_clique_complex(const SimpleGraph &g, int max_dim,
                                       const LiftOptions &options) {
  if (max_dim < 0) throw InputError("max_dim must be non-negative");
  CapGuard guard(options.member_cap);
  auto levels = vertex_and_edge_levels(g, max_dim, guard);

  // Cliques of size >= 3 by extending sorted cliques with larger common
  // neighbours; per-dimension order is lexicographic.
  std::vector<Vertex> clique;
  std::vector<Vertex> candidates;
  auto grow = [&](auto &&self, const std::vector<Vertex> &cands) -> void {
    const int p = static_cast<int>(clique.size()) - 1;
    if (p >= max_dim) return;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const Vertex w = cands[i];
      clique.push_back(w);
      if (p + 1 >= 2) {
        guard.add();
        levels[p + 1].push(clique);
      }
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (g.adjacent(w, cands[j])) next.push_back(cands[j]);
      self(self, next);
      clique.pop_back();
    }
  };
  if (max_dim >= 2) {
    for (Vertex s = 0; s < g.order(); ++s) {
      clique.assign(1, s);
      candidates.clear();
      for (Vertex w : g.neighbors(s))
        if (w > s) candidates.push_back(w);
      grow(grow, candidates);
    }
    // DFS order interleaves sizes; sort each level lexicographically.
    for (int p = 2; p <= max_dim; ++p) {
      auto &lvl = levels[p];
      const std::size_t width = static_cast<std::size_t>(p) + 1;
      std::vector<std::vector<Vertex>> rows;
      for (std::size_t i = 0; i < lvl.size(); ++i)
        rows.emplace_back(lvl[i].begin(), lvl[i].end());
      std::sort(rows.begin(), rows.end());
      Level sorted;
      sorted.vertices.reserve(rows.size() * width);
      for (const auto &r : rows) sorted.push(r);
      lvl = std::move(sorted);
    }
  }

  return assemble(ComplexKind::simplex, g, max_dim, std::move(levels),
                  [](int p, std::span<const Vertex> simplex, std::vector<Vertex> &face,
                     auto &&emit) {
                    for (int q = 0; q <= p; ++q) {
                      face.clear();
                      for (int i = 0; i <= p; ++i)
                        if (i != q) face.push_back(simplex[i]);
                      emit(face);
                    }
                  });
}

HigherOrderComplex lift_ring_complex(const SimpleGraph &g, int max_ring,
                                     const LiftOptions &options) {
  if (max_ring < 3) throw InputError("max_ring must be at least 3");
  CapGuard guard(options.member_cap);
  auto levels = vertex_and_edge_levels(g, 2, guard);

  // Chordless cycles with smallest vertex s: grow induced paths over vertices
  // > s; a vertex adjacent to s closes the cycle and is never extended.
  std::vector<Vertex> path;
  std::vector<char> on_path(g.order(), 0);
  auto chord_free = [&](Vertex w) {
    // w may touch only the current tail (and s, handled by the caller).
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (g.adjacent(w, path[i])) return false;
    return true;
  };
  auto extend = [&](auto &&self, Vertex s) -> void {
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
      if (w <= s || on_path[w] || !chord_free(w)) continue;
      if (g.adjacent(w, s)) {
        if (path.size() >= 2 && path[1] < w &&
            static_cast<int>(path.size()) + 1 <= max_ring) {
          path.push_back(w);
          guard.add();
          levels[2].push(path);
          path.pop_back();
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 2 > max_ring) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, s);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex v1 : g.neighbors(s)) {
      if (v1 <= s) continue;
      path.assign({s, v1});
      on_path[s] = on_path[v1] = 1;
      extend(extend, s);
      on_path[s] = on_path[v1] = 0;
    }
  }

  return assemble(ComplexKind::cell, g, 2, std::move(levels),
                  [](int p, std::span<const Vertex> cell, std::vector<Vertex> &face,
                     auto &&emit) {
                    if (p == 1) {
                      for (Vertex v : cell) {
                        face.assign(1, v);
                        emit(face);
                      }
                      return;
                    }
                    for (std::size_t i = 0; i < cell.size(); ++i) {
                      face.assign({cell[i], cell[(i + 1) % cell.size()]});
                      emit(face);
                    }
                  });
}

HigherOrderComplex lift(const SimpleGraph &g, ComplexKind kind, int param,
                        const LiftOptions &options) {
  switch (kind) {
    case ComplexKind::path: return lift_path_complex(g, param, options);
    case ComplexKind::simplex: return lift_clique_complex(g, param, options);
    case ComplexKind::cell: return lift_ring_complex(g, param, options);
  }
  throw InputError("unknown complex kind");
}

}  // namespace pathwl
