// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathwl/chain.hpp"
#include "pathwl/errors.hpp"
#include "pathwl/lift.hpp"

namespace pathwl {
namespace {

using Seq = std::vector<Vertex>;

// Square with edges {0,1},{1,2},{2,3},{0,3}.
SimpleGraph square() { return testing::graph_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

TEST(SignedBoundary, Edge) {
  const Seq e01 = {0, 1};
  EXPECT_EQ(signed_boundary(e01), (SignedChain{{{1}, 1}, {{0}, -1}}));
}

TEST(SignedBoundary, TwoPath) {
  const Seq e012 = {0, 1, 2};
  EXPECT_EQ(signed_boundary(e012), (SignedChain{{{1, 2}, 1}, {{0, 2}, -1}, {{0, 1}, 1}}));
}

TEST(SignedBoundary, WorkedExampleCancels) {
  const SignedChain v{{{0, 1, 2}, 1}, {{0, 3, 2}, -1}};
  const auto d = signed_boundary(v);
  EXPECT_EQ(d, (SignedChain{{{1, 2}, 1}, {{0, 1}, 1}, {{3, 2}, -1}, {{0, 3}, -1}}));
  EXPECT_EQ(d.coefficient({0, 2}), 0);
  EXPECT_EQ(d.size(), 4u);
}

TEST(SignedBoundary, EmptyAndVertex) {
  EXPECT_THROW(signed_boundary(Seq{}), InputError);
  EXPECT_TRUE(signed_boundary(Seq{3}).empty());
}

TEST(SignedBoundary, BoundaryOfBoundaryVanishes) {
  // Every sequence of distinct vertices of K5 up to length 5.
  for (std::size_t len = 1; len <= 5; ++len) {
    std::vector<Seq> seqs;
    Seq cur;
    std::vector<char> used(5, 0);
    testing::all_sequences(5, len, cur, used, seqs);
    for (const auto &s : seqs) EXPECT_TRUE(signed_boundary(signed_boundary(s)).empty());
  }
}

TEST(SignedChain, Arithmetic) {
  SignedChain a{{{0, 1}, 2}};
  SignedChain b{{{0, 1}, -2}, {{1, 2}, 1}};
  const auto s = a + b;
  EXPECT_EQ(s, (SignedChain{{{1, 2}, 1}}));
  EXPECT_EQ(a - a, SignedChain{});
  EXPECT_EQ(to_string(SignedChain{{{1, 2}, 1}, {{0, 3}, -1}}), "-e03 + e12");
  EXPECT_EQ(to_string(SignedChain{}), "0");
}

TEST(BoundaryInvariance, WorkedExample) {
  const SignedChain v{{{0, 1, 2}, 1}, {{0, 3, 2}, -1}};
  EXPECT_TRUE(is_boundary_invariant(v, square()));
}

TEST(BoundaryInvariance, SinglePathsFail) {
  EXPECT_FALSE(is_boundary_invariant(elementary(Seq{0, 1, 2}), square()));
  EXPECT_FALSE(is_boundary_invariant(elementary(Seq{0, 3, 2}), square()));
}

TEST(BoundaryInvariance, EdgesAlwaysPass) {
  const auto g = square();
  for (auto [u, v] : g.edges()) EXPECT_TRUE(is_boundary_invariant(elementary(Seq{u, v}), g));
}

TEST(BoundaryInvariance, RejectsNonAllowedTerms) {
  EXPECT_THROW(is_boundary_invariant(elementary(Seq{0, 2}), square()), InputError);
}

TEST(BoundaryInvariance, TrianglePathsAreInvariant) {
  // In K3 every deletion is allowed.
  EXPECT_TRUE(is_boundary_invariant(elementary(Seq{0, 1, 2}), complete_graph(3)));
}

}  // namespace
}  // namespace pathwl
