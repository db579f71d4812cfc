#include <gtest/gtest.h>

#include "dompack/errors.hpp"
#include "dompack/generators.hpp"
#include "dompack/transforms.hpp"
#include "oracle.hpp"

using namespace dompack;

TEST(BuildSplit, SingleArc) {
  const SplitTransform s = build_split(Digraph(2, {{0, 1}}));
  EXPECT_EQ(s.split_digraph, Digraph(4, {{0, 2}, {1, 3}, {0, 1}, {0, 3}}));
  EXPECT_TRUE(s.split_graph.is_symmetric());
  EXPECT_EQ(s.split_graph.arc_count(), 8u);
  EXPECT_EQ(s.primed(1), 3u);
  EXPECT_EQ(s.unprimed(3), 1u);
}

TEST(BuildSplit, SingleVertexAndCycle) {
  EXPECT_EQ(build_split(Digraph(1, {})).split_digraph, Digraph(2, {{0, 1}}));
  const SplitTransform s = build_split(directed_cycle(3).digraph);
  EXPECT_EQ(s.split_digraph.order(), 6u);
  EXPECT_EQ(s.split_digraph.arc_count(), 9u);
}

TEST(ReduceSupportLeaves, Examples) {
  const RootedTree star(Digraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(reduce_support_leaves(star).digraph(), Digraph(2, {{0, 1}}));

  const RootedTree path(Digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(reduce_support_leaves(path).digraph(), path.digraph());

  const RootedTree two(Digraph(5, {{0, 1}, {1, 2}, {1, 3}, {0, 4}}));
  const RootedTree r = reduce_support_leaves(two);
  EXPECT_EQ(r.order(), 4u);
  // Kept: 0, 1, 2 (lowest leaf under 1) and 4, relabelled 0..3.
  EXPECT_EQ(r.digraph(), Digraph(4, {{0, 1}, {1, 2}, {0, 3}}));
}

TEST(ReduceSupportLeaves, RejectsSingleVertex) {
  EXPECT_THROW(reduce_support_leaves(RootedTree(Digraph(1, {}))), ContractError);
}

TEST(RemoveArc, Examples) {
  EXPECT_EQ(remove_arc(directed_cycle(3).digraph, 2, 0), Digraph(3, {{0, 1}, {1, 2}}));
  const auto t = RootedTree::try_make(remove_arc(directed_cycle(4).digraph, 3, 0));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->root(), 0u);
  EXPECT_EQ(remove_arc(Digraph(2, {{0, 1}, {1, 0}}), 0, 1), Digraph(2, {{1, 0}}));
  EXPECT_THROW(remove_arc(Digraph(2, {{0, 1}}), 1, 0), std::out_of_range);
}

class TransformProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(TransformProperties, SplitPreservesGammaAndRho) {
  const std::uint64_t seed = GetParam();
  const std::size_t n = 1 + seed % 9;
  const double density = 0.1 + 0.8 * static_cast<double>(seed % 17) / 16.0;
  const Digraph d = random_digraph(n, density, seed).digraph;
  const SplitTransform s = build_split(d);
  EXPECT_EQ(s.split_graph.order(), 2 * n);
  EXPECT_EQ(s.split_digraph.arc_count(), n + 2 * d.arc_count());
  EXPECT_EQ(oracle::undirected_gamma(s.split_graph), oracle::gamma(d));
  EXPECT_EQ(oracle::undirected_rho(s.split_graph), oracle::rho(d));
}

TEST_P(TransformProperties, ReductionPreservesRho) {
  const std::uint64_t seed = GetParam();
  const RootedTree t(random_rooted_tree(2 + seed % 13, seed).digraph);
  const RootedTree r = reduce_support_leaves(t);
  EXPECT_EQ(oracle::rho(r.digraph()), oracle::rho(t.digraph()));
}

TEST_P(TransformProperties, CycleArcRemovalGivesRootedTree) {
  const std::uint64_t seed = GetParam();
  const Digraph d = random_contrafunctional(2 + seed % 13, seed, 2).digraph;
  for (const Arc& a : d.arcs()) {
    const Digraph cut = remove_arc(d, a.tail, a.head);
    const Classification c = classify(cut);
    // Only cycle arcs leave a connected digraph behind.
    if (!c.connected) continue;
    ASSERT_TRUE(c.rooted_tree);
    EXPECT_EQ(c.tree->root(), a.head);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TransformProperties, ::testing::Range<std::uint64_t>(1, 101));
