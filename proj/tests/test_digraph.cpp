#include <gtest/gtest.h>

#include <random>

#include "dompack/digraph.hpp"
#include "dompack/errors.hpp"
#include "dompack/generators.hpp"

using namespace dompack;

namespace {

Digraph path3() { return Digraph(3, {{0, 1}, {1, 2}}); }
Digraph star4() { return Digraph(4, {{0, 1}, {0, 2}, {0, 3}}); }
Digraph c3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST(Digraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Digraph(2, {{0, 0}}), ContractError);
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), ContractError);
  EXPECT_THROW(Digraph(2, {{0, 2}}), ContractError);
  EXPECT_NO_THROW(Digraph(2, {{0, 1}, {1, 0}}));
}

TEST(Digraph, ArcsAreSorted) {
  const Digraph d(3, {{2, 0}, {0, 2}, {0, 1}});
  ASSERT_EQ(d.arc_count(), 3u);
  EXPECT_EQ(d.arcs()[0], (Arc{0, 1}));
  EXPECT_EQ(d.arcs()[1], (Arc{0, 2}));
  EXPECT_EQ(d.arcs()[2], (Arc{2, 0}));
}

TEST(InNeighbors, Examples) {
  EXPECT_EQ(in_neighbors(path3(), 1), (VertexSet{0}));
  EXPECT_EQ(in_neighbors(path3(), 1, true), (VertexSet{0, 1}));
  EXPECT_EQ(in_neighbors(star4(), 0), VertexSet{});
  EXPECT_THROW(in_neighbors(path3(), 3), std::out_of_range);
}

TEST(OutNeighbors, Examples) {
  EXPECT_EQ(out_neighbors(c3(), 0, true), (VertexSet{0, 1}));
  EXPECT_EQ(out_neighbors(Digraph(2, {{0, 1}}), 1), VertexSet{});
  EXPECT_EQ(out_neighbors(star4(), 0), (VertexSet{1, 2, 3}));
  EXPECT_THROW(out_neighbors(star4(), 7), std::out_of_range);
}

TEST(DegreeStats, Examples) {
  const DegreeStats s5 = degree_stats(directed_star(5).digraph);
  EXPECT_EQ(s5.max_out, 4u);
  EXPECT_EQ(s5.max_in, 1u);
  EXPECT_EQ(s5.min_underlying, 1u);
  EXPECT_EQ(s5.max_underlying, 4u);
  EXPECT_EQ(s5.delta_star, 1u);

  const DegreeStats c4 = degree_stats(directed_cycle(4).digraph);
  EXPECT_EQ(c4, (DegreeStats{1, 1, 2, 2, 1}));
  EXPECT_EQ(degree_stats(Digraph(1, {})), DegreeStats{});
}

TEST(ArcCut, Examples) {
  EXPECT_EQ(arc_cut(c3(), {0}, {1}), 1u);
  EXPECT_EQ(arc_cut(c3(), VertexSet::all(3), VertexSet::all(3)), 3u);
  EXPECT_EQ(arc_cut(Digraph(4, {}), {0, 1}, {2, 3}), 0u);
}

TEST(Classify, Examples) {
  const Classification p = classify(path3());
  EXPECT_TRUE(p.rooted_tree);
  EXPECT_TRUE(p.directed_tree);
  EXPECT_TRUE(p.connected);
  ASSERT_TRUE(p.tree);
  EXPECT_EQ(p.tree->root(), 0u);

  const Classification c = classify(c3());
  EXPECT_TRUE(c.contrafunctional);
  EXPECT_TRUE(c.connected);
  EXPECT_FALSE(c.rooted_tree);
  EXPECT_FALSE(c.directed_tree);

  const Classification t = classify(Digraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_TRUE(t.tournament);
  EXPECT_TRUE(t.connected);
}

TEST(Classify, OppositePairIsNotADirectedTree) {
  const Classification c = classify(Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_FALSE(c.directed_tree);
  EXPECT_TRUE(c.contrafunctional);
}

TEST(BfsOrder, Examples) {
  EXPECT_EQ(bfs_order(RootedTree(path3())), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(bfs_order(RootedTree(star4())), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(bfs_order(RootedTree(Digraph(4, {{0, 1}, {0, 2}, {2, 3}}))),
            (std::vector<Vertex>{0, 1, 2, 3}));
  // Level ties by id even when labels are out of order.
  EXPECT_EQ(bfs_order(RootedTree(Digraph(4, {{3, 2}, {3, 0}, {0, 1}}))),
            (std::vector<Vertex>{3, 0, 2, 1}));
}

TEST(RootedTree, RejectsNonTrees) {
  EXPECT_THROW(RootedTree{c3()}, ContractError);
  EXPECT_THROW(RootedTree{Digraph(3, {{0, 1}})}, ContractError);
  EXPECT_FALSE(RootedTree::try_make(Digraph(3, {{0, 1}, {2, 1}})).has_value());
  const RootedTree t(star4());
  EXPECT_TRUE(t.is_support(0));
  EXPECT_TRUE(t.is_leaf(3));
  EXPECT_EQ(t.height(), 1u);
  EXPECT_FALSE(t.parent(0).has_value());
}

TEST(InducedSubgraph, RelabelsInOrder) {
  const InducedSubgraph s = induced_subgraph(c3(), {0, 2});
  EXPECT_EQ(s.graph.order(), 2u);
  EXPECT_EQ(s.original, (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(s.graph.has_arc(1, 0));
  EXPECT_EQ(s.graph.arc_count(), 1u);
}

class DigraphProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DigraphProperties, NeighborhoodsAndCuts) {
  const std::uint64_t seed = GetParam();
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + rng() % 10;
  const Digraph d = random_digraph(n, 0.1 + 0.1 * static_cast<double>(rng() % 9), seed).digraph;

  std::size_t out_sum = 0;
  std::size_t in_sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    out_sum += out_neighbors(d, u).size();
    in_sum += in_neighbors(d, u).size();
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(out_neighbors(d, u).contains(v), in_neighbors(d, v).contains(u));
    }
  }
  EXPECT_EQ(out_sum, d.arc_count());
  EXPECT_EQ(in_sum, d.arc_count());

  const VertexSet all = VertexSet::all(n);
  EXPECT_EQ(arc_cut(d, all, all), d.arc_count());
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  for (Vertex v = 0; v < n; ++v) ((rng() & 1) ? left : right).push_back(v);
  const VertexSet a{std::vector<Vertex>(left)};
  const VertexSet b{std::vector<Vertex>(right)};
  EXPECT_EQ(arc_cut(d, all, a) + arc_cut(d, all, b), d.arc_count());

  const Classification c = classify(d);
  EXPECT_FALSE(c.rooted_tree && c.contrafunctional);
}

TEST_P(DigraphProperties, BfsParentsComeFirst) {
  const auto g = random_rooted_tree(1 + GetParam() % 16, GetParam());
  const RootedTree t(g.digraph);
  const auto order = bfs_order(t);
  std::vector<std::size_t> pos(t.order());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (auto p = t.parent(v)) EXPECT_LT(pos[*p], pos[v]);
  }
  const Classification c = classify(g.digraph);
  EXPECT_TRUE(c.rooted_tree && c.directed_tree && !c.contrafunctional);
}

INSTANTIATE_TEST_SUITE_P(Seeds, DigraphProperties, ::testing::Range<std::uint64_t>(1, 121));
