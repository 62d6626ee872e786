// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pathwl/errors.hpp"
#include "pathwl/lift.hpp"

namespace pathwl {
namespace {

using testing::graph_from;
using testing::Seq;

// C4 with the labelling 0-1-3-2-0.
SimpleGraph fig3b_square() { return graph_from(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

std::set<Seq> members_at(const HigherOrderComplex &c, int p) {
  std::set<Seq> out;
  for (MemberId id = c.first_id(p); id < c.end_id(p); ++id) {
    auto s = c.carrier(id);
    out.emplace(s.begin(), s.end());
  }
  return out;
}

std::set<Seq> boundary_carriers(const HigherOrderComplex &c, MemberId id) {
  std::set<Seq> out;
  for (MemberId b : c.boundary(id)) {
    auto s = c.carrier(b);
    out.emplace(s.begin(), s.end());
  }
  return out;
}

TEST(PathLift, PathGraphCounts) {
  const auto c = lift_path_complex(path_graph(4), 3);
  EXPECT_EQ(c.counts(), (std::vector<std::size_t>{4, 3, 2, 1}));
  EXPECT_EQ(members_at(c, 3), (std::set<Seq>{{0, 1, 2, 3}}));
}

TEST(PathLift, SquareCountsAndBoundary) {
  const auto c = lift_path_complex(fig3b_square(), 3);
  EXPECT_EQ(c.counts(), (std::vector<std::size_t>{4, 4, 4, 4}));
  const Seq e0231 = {0, 2, 3, 1};
  EXPECT_TRUE(c.find(e0231).has_value());
  const Seq e1023 = {1, 0, 2, 3};
  const auto id = c.find(e1023);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(boundary_carriers(c, *id), (std::set<Seq>{{0, 2, 3}, {1, 0, 2}}));
}

TEST(PathLift, FindCanonicalises) {
  const auto c = lift_path_complex(path_graph(4), 3);
  const Seq rev = {3, 2, 1, 0};
  EXPECT_EQ(c.find(rev), c.find(Seq{0, 1, 2, 3}));
  EXPECT_FALSE(c.find(Seq{0, 2}).has_value());
  EXPECT_FALSE(c.find(Seq{0, 1, 2, 3, 0}).has_value());
}

TEST(PathLift, TruncationModeKeepsEndsOnly) {
  const auto g = complete_graph(4);
  const auto inc = lift_path_complex(g, 3);
  const auto tr = lift_path_complex(g, 3, {50'000'000, BoundaryMode::truncation});
  EXPECT_EQ(inc.counts(), tr.counts());
  for (MemberId id = inc.first_id(1); id < inc.member_count(); ++id) {
    const int p = inc.dim_of(id);
    EXPECT_EQ(inc.boundary(id).size(), static_cast<std::size_t>(p + 1));
    EXPECT_EQ(tr.boundary(id).size(), 2u);
  }
}

TEST(PathLift, DegenerateInputs) {
  const auto empty = lift_path_complex(SimpleGraph(0), 3);
  EXPECT_EQ(empty.member_count(), 0u);
  const auto vertices = lift_path_complex(complete_graph(3), 0);
  EXPECT_EQ(vertices.counts(), (std::vector<std::size_t>{3}));
  const auto edgeless = lift_path_complex(SimpleGraph(3), 2);
  EXPECT_EQ(edgeless.counts(), (std::vector<std::size_t>{3, 0, 0}));
  EXPECT_THROW(lift_path_complex(path_graph(3), -1), InputError);
}

TEST(PathLift, MemberCap) {
  EXPECT_THROW(lift_path_complex(complete_graph(6), 4, {100, BoundaryMode::incidence}),
               CapExceededError);
  EXPECT_NO_THROW(lift_path_complex(path_graph(4), 3, {10, BoundaryMode::incidence}));
  EXPECT_THROW(lift_path_complex(path_graph(4), 3, {9, BoundaryMode::incidence}),
               CapExceededError);
}

TEST(PathLift, MatchesBruteForceOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto g = testing::random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    const int max_dim = 4;
    const auto c = lift_path_complex(g, max_dim);
    const auto oracle = testing::oracle_paths(g, max_dim);
    for (int p = 0; p <= max_dim; ++p) {
      EXPECT_EQ(members_at(c, p), oracle[p]) << "dim " << p;
      EXPECT_EQ(c.count(p), oracle[p].size());
    }
    for (MemberId id = 0; id < c.member_count(); ++id) {
      auto s = c.carrier(id);
      const Seq seq(s.begin(), s.end());
      EXPECT_EQ(boundary_carriers(c, id), testing::oracle_path_boundary(g, seq, true));
    }
  }
}

TEST(PathLift, StructuralInvariants) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_graph(rng, 2 + rng() % 7, 0.5);
    const auto c = lift_path_complex(g, 3);
    for (MemberId id = 0; id < c.member_count(); ++id) {
      const int p = c.dim_of(id);
      auto s = c.carrier(id);
      if (p >= 1) {
        // closure: both truncations are members and sit in the boundary
        const Seq head(s.begin(), s.end() - 1), tail(s.begin() + 1, s.end());
        const auto h = c.find(head), t = c.find(tail);
        ASSERT_TRUE(h && t);
        const auto b = c.boundary(id);
        EXPECT_TRUE(std::binary_search(b.begin(), b.end(), *h));
        EXPECT_TRUE(std::binary_search(b.begin(), b.end(), *t));
        EXPECT_GE(b.size(), 2u);
        EXPECT_LE(b.size(), static_cast<std::size_t>(p + 1));
        EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
        EXPECT_LT(s.front(), s.back());
      }
      // transpose consistency
      for (MemberId b : c.boundary(id)) {
        const auto cob = c.coboundary(b);
        EXPECT_TRUE(std::binary_search(cob.begin(), cob.end(), id));
        EXPECT_EQ(c.dim_of(b), p - 1);
      }
      for (MemberId up : c.coboundary(id)) {
        const auto b = c.boundary(up);
        EXPECT_TRUE(std::binary_search(b.begin(), b.end(), id));
      }
    }
  }
}

TEST(PathLift, CompleteGraphsHaveFullBoundaries) {
  const auto c = lift_path_complex(complete_graph(5), 4);
  for (MemberId id = c.first_id(1); id < c.member_count(); ++id)
    EXPECT_EQ(c.boundary(id).size(), static_cast<std::size_t>(c.dim_of(id) + 1));
}

std::vector<std::vector<std::size_t>> boundary_size_profile(const HigherOrderComplex &c) {
  std::vector<std::vector<std::size_t>> out(c.max_dim() + 1);
  for (MemberId id = 0; id < c.member_count(); ++id)
    out[c.dim_of(id)].push_back(c.boundary(id).size());
  for (auto &v : out) std::sort(v.begin(), v.end());
  return out;
}

TEST(PathLift, PermutationEquivariance) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto g = testing::random_graph(rng, n, 0.45);
    const auto pi = testing::random_permutation(rng, n);
    const auto a = lift_path_complex(g, 3);
    const auto b = lift_path_complex(apply_permutation(g, pi), 3);
    EXPECT_EQ(a.counts(), b.counts());
    EXPECT_EQ(boundary_size_profile(a), boundary_size_profile(b));
    // explicit induced relabelling
    for (MemberId id = 0; id < a.member_count(); ++id) {
      Seq moved;
      for (Vertex v : a.carrier(id)) moved.push_back(pi(v));
      const auto image = b.find(moved);
      ASSERT_TRUE(image.has_value());
      std::set<Seq> mapped;
      for (MemberId f : a.boundary(id)) {
        Seq fm;
        for (Vertex v : a.carrier(f)) fm.push_back(pi(v));
        mapped.insert(testing::orient(fm));
      }
      EXPECT_EQ(mapped, boundary_carriers(b, *image));
    }
  }
}

TEST(Adjacency, UpperAndLowerWitnesses) {
  const auto c = lift_path_complex(fig3b_square(), 3);
  const auto up = c.upper_adjacency();
  const auto low = c.lower_adjacency();
  for (MemberId s = 0; s < c.member_count(); ++s) {
    for (auto [tau, delta] : up[s]) {
      EXPECT_NE(tau, s);
      const auto b = c.boundary(delta);
      EXPECT_TRUE(std::binary_search(b.begin(), b.end(), s));
      EXPECT_TRUE(std::binary_search(b.begin(), b.end(), tau));
      // symmetric
      EXPECT_TRUE(std::binary_search(up[tau].begin(), up[tau].end(), AdjacentEntry{s, delta}));
    }
    for (auto [tau, delta] : low[s]) {
      const auto cb = c.coboundary(delta);
      EXPECT_TRUE(std::binary_search(cb.begin(), cb.end(), s));
      EXPECT_TRUE(std::binary_search(cb.begin(), cb.end(), tau));
    }
  }
  // e01 and e02 share the co-boundary e102 only.
  const auto e01 = *c.find(Seq{0, 1}), e02 = *c.find(Seq{0, 2});
  std::vector<MemberId> witnesses;
  for (auto [tau, delta] : up[e01])
    if (tau == e02) witnesses.push_back(delta);
  EXPECT_EQ(witnesses, (std::vector<MemberId>{*c.find(Seq{1, 0, 2})}));
}

TEST(Adjacency, MultipleWitnessesKept) {
  const auto c = lift_path_complex(complete_graph(4), 2);
  const auto e012 = *c.find(Seq{0, 1, 2}), e102 = *c.find(Seq{1, 0, 2});
  std::size_t shared = 0;
  c.for_each_lower(e012, [&](MemberId tau, MemberId) { shared += tau == e102; });
  // e012 = {e01, e12, e02}; e102 = {e01, e02, e12}: all three faces shared.
  EXPECT_EQ(shared, 3u);
}

TEST(CliqueLift, FigureTwoCounts) {
  const auto g = graph_from(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  EXPECT_EQ(lift_clique_complex(g, 2).counts(), (std::vector<std::size_t>{4, 4, 1}));
}

TEST(CliqueLift, CompleteAndEdgeless) {
  EXPECT_EQ(lift_clique_complex(complete_graph(4), 3).counts(),
            (std::vector<std::size_t>{4, 6, 4, 1}));
  const auto e = lift_clique_complex(SimpleGraph(3), 2);
  EXPECT_EQ(e.counts(), (std::vector<std::size_t>{3, 0, 0}));
}

TEST(CliqueLift, MatchesSubsetOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testing::random_graph(rng, 1 + rng() % 9, 0.6);
    const auto c = lift_clique_complex(g, 4);
    const auto oracle = testing::oracle_cliques(g, 4);
    for (int p = 0; p <= 4; ++p) EXPECT_EQ(members_at(c, p), oracle[p]);
    for (MemberId id = c.first_id(1); id < c.member_count(); ++id)
      EXPECT_EQ(c.boundary(id).size(), static_cast<std::size_t>(c.dim_of(id) + 1));
  }
}

TEST(RingLift, SpecExamples) {
  const auto c4 = parse_graph6("Cl");
  const auto c = lift_ring_complex(c4, 4);
  EXPECT_EQ(c.counts(), (std::vector<std::size_t>{4, 4, 1}));
  EXPECT_EQ(c.boundary(c.first_id(2)).size(), 4u);
  EXPECT_EQ(lift_ring_complex(complete_graph(4), 4).count(2), 4u);
  EXPECT_EQ(lift_ring_complex(c4, 3).count(2), 0u);
  EXPECT_THROW(lift_ring_complex(c4, 2), InputError);
}

TEST(RingLift, CanonicalForm) {
  const auto c = lift_ring_complex(fig3b_square(), 4);
  const auto ring = c.carrier(c.first_id(2));
  EXPECT_EQ(Seq(ring.begin(), ring.end()), (Seq{0, 1, 3, 2}));
  EXPECT_EQ(c.find(Seq{3, 2, 0, 1}), c.first_id(2));
  EXPECT_EQ(c.find(Seq{2, 3, 1, 0}), c.first_id(2));
}

TEST(RingLift, MatchesInducedCycleOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = testing::random_graph(rng, 3 + rng() % 7, 0.25 + 0.05 * (trial % 8));
    const int k = 3 + static_cast<int>(rng() % 6);
    const auto c = lift_ring_complex(g, k);
    std::set<Seq> sets;
    for (MemberId id = c.first_id(2); id < c.end_id(2); ++id) {
      auto s = c.carrier(id);
      Seq ring(s.begin(), s.end());
      // consecutive ring vertices are adjacent, boundary is the edge cycle
      for (std::size_t i = 0; i < ring.size(); ++i)
        EXPECT_TRUE(g.adjacent(ring[i], ring[(i + 1) % ring.size()]));
      EXPECT_EQ(c.boundary(id).size(), ring.size());
      EXPECT_EQ(ring.front(), *std::min_element(ring.begin(), ring.end()));
      EXPECT_LT(ring[1], ring.back());
      std::sort(ring.begin(), ring.end());
      sets.insert(ring);
    }
    EXPECT_EQ(sets, testing::oracle_rings(g, k));
    EXPECT_EQ(sets.size(), c.count(2));
  }
}

TEST(Lift, Dispatch) {
  const auto g = fig3b_square();
  EXPECT_EQ(lift(g, ComplexKind::path, 2), lift_path_complex(g, 2));
  EXPECT_EQ(lift(g, ComplexKind::simplex, 2), lift_clique_complex(g, 2));
  EXPECT_EQ(lift(g, ComplexKind::cell, 4), lift_ring_complex(g, 4));
}

TEST(Lift, Deterministic) {
  std::mt19937_64 rng(3);
  const auto g = testing::random_graph(rng, 9, 0.5);
  EXPECT_EQ(lift_path_complex(g, 3), lift_path_complex(g, 3));
}

}  // namespace
}  // namespace pathwl
