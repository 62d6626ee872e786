// SPDX-License-Identifier: Apache-2.0
#include "pathwl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pathwl/errors.hpp"

namespace pathwl {

SimpleGraph::SimpleGraph(std::size_t n) : adjacency_(n) {}

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto &nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice += nbrs.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  const auto &nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexPermutation::VertexPermutation(std::vector<Vertex> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (Vertex v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw InputError("vertex permutation is not a bijection on 0.." +
                       std::to_string(mapping_.size()) + "-1");
    }
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
  std::vector<Vertex> m(n);
  std::iota(m.begin(), m.end(), Vertex{0});
  return VertexPermutation(std::move(m));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<Vertex> inv(mapping_.size());
  for (Vertex v = 0; v < mapping_.size(); ++v) inv[mapping_[v]] = v;
  return VertexPermutation(std::move(inv));
}

SimpleGraph apply_permutation(const SimpleGraph &g, const VertexPermutation &p) {
  if (p.size() != g.order()) {
    throw InputError("permutation length " + std::to_string(p.size()) +
                     " does not match graph order " +
                     std::to_string(g.order()));
  }
  auto edges = g.edges();
  for (auto &[u, v] : edges) {
    u = p(u);
    v = p(v);
  }
  return SimpleGraph::from_edges(g.order(), edges);
}

SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return SimpleGraph::from_edges(a.order() + b.order(), edges);
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  if (n >= 3) {
    for (Vertex u = 0; u < n; ++u)
      edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  }
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return SimpleGraph::from_edges(n, edges);
}

std::optional<SrgParameters> srg_parameters(const SimpleGraph &g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  if (k == 0 || k == n - 1) return std::nullopt;

  std::optional<std::size_t> lambda, mu;
  std::vector<char> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) mark[w] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      std::size_t common = 0;
      for (Vertex w : g.neighbors(v)) common += mark[w];
      auto &slot = mark[v] ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
    for (Vertex w : g.neighbors(u)) mark[w] = 0;
  }
  return SrgParameters{n, k, lambda.value_or(0), mu.value_or(0)};
}

bool is_strongly_regular(const SimpleGraph &g, const SrgParameters &expected) {
  auto got = srg_parameters(g);
  return got && *got == expected;
}

}  // namespace pathwl
