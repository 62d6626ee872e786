// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathwl {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbour lists are sorted, which makes the
/// integer vertex labels the ordering used for canonical path orientation.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);

  /// Builds a graph from an edge list. Duplicate edges and both orientations
  /// of the same edge collapse to one. Throws InputError on self-loops or
  /// out-of-range endpoints.
  static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph &, const SimpleGraph &) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A bijection on 0..n-1.
class VertexPermutation {
 public:
  /// Throws InputError unless `mapping` is a permutation of 0..size-1.
  explicit VertexPermutation(std::vector<Vertex> mapping);

  static VertexPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return mapping_.size(); }
  Vertex operator()(Vertex v) const { return mapping_[v]; }
  std::span<const Vertex> mapping() const noexcept { return mapping_; }
  VertexPermutation inverse() const;

 private:
  std::vector<Vertex> mapping_;
};

/// Relabels edge {u, v} to {p(u), p(v)}. Throws InputError on size mismatch.
SimpleGraph apply_permutation(const SimpleGraph &g, const VertexPermutation &p);

/// Disjoint union; vertices of `b` are shifted by a.order().
SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b);

// Small named graphs used throughout tests and examples.
SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);

// ---- ingestion ------------------------------------------------------------

/// Decodes one graph6 line (without the trailing newline). A leading
/// ">>graph6<<" header is accepted. Throws ParseError naming the byte offset.
SimpleGraph parse_graph6(std::string_view line);

std::string encode_graph6(const SimpleGraph &g);

/// Parses the line-oriented edge-list format:
///
///   # comment
///   n <count>
///   u v
///
/// Throws ParseError with the 1-based line number.
SimpleGraph parse_edge_list(std::string_view text);

std::string encode_edge_list(const SimpleGraph &g);

/// Reads every non-empty line of a graph6 file.
std::vector<SimpleGraph> read_graph6_file(const std::filesystem::path &path);

/// Reads a single graph; `.g6`/`.graph6` files are decoded as graph6 (first
/// graph unless `index` selects another line), anything else as an edge list.
SimpleGraph read_graph_file(const std::filesystem::path &path,
                            std::size_t index = 0);

// ---- strongly regular checks ------------------------------------------------

struct SrgParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  friend bool operator==(const SrgParameters &,
                         const SrgParameters &) = default;
};

/// Returns the (n, k, lambda, mu) parameters if `g` is strongly regular.
/// Complete and edgeless graphs are rejected since mu or lambda is undefined.
std::optional<SrgParameters> srg_parameters(const SimpleGraph &g);

bool is_strongly_regular(const SimpleGraph &g, const SrgParameters &expected);

}  // namespace pathwl
