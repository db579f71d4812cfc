#include <gtest/gtest.h>

#include "dompack/errors.hpp"
#include "dompack/generators.hpp"
#include "dompack/solvers.hpp"
#include "dompack/transforms.hpp"
#include "dompack/tree_algorithms.hpp"
#include "oracle.hpp"

using namespace dompack;

namespace {

RootedTree tree(std::size_t n, std::vector<Arc> arcs) { return RootedTree(Digraph(n, std::move(arcs))); }

RootedTree path3() { return tree(3, {{0, 1}, {1, 2}}); }
RootedTree star4() { return tree(4, {{0, 1}, {0, 2}, {0, 3}}); }

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

// Everything the tree module claims, checked against brute force.
void check_tree(const Digraph& d) {
  const RootedTree t(d);
  const std::size_t rho = oracle::rho(d);
  const std::size_t gamma = oracle::gamma(d);
  const RdsesResult r = max_packing_rooted_tree(t);
  ASSERT_EQ(r.chosen.size(), rho);
  ASSERT_EQ(rho, gamma);
  ASSERT_TRUE(is_packing(d, r.chosen));
  ASSERT_LE(gamma, ceil_half(d.order()));

  std::vector<int> hits(d.order(), 0);
  for (const VertexSet& block : r.partition) {
    for (Vertex v : block) ++hits[v];
  }
  for (int h : hits) ASSERT_EQ(h, 1);
  // A stage leaf is a leaf of what remains: its children went earlier.
  std::vector<char> gone(d.order(), 0);
  for (const RdsesStage& s : r.stages) {
    ASSERT_TRUE(s.removed.contains(s.support));
    ASSERT_TRUE(s.removed.contains(s.leaf));
    for (Vertex c : t.children(s.leaf)) ASSERT_TRUE(gone[c]);
    for (Vertex v : s.removed) ASSERT_FALSE(gone[v]);
    for (Vertex v : s.removed) gone[v] = 1;
    for (Vertex v : s.removed) {
      if (v != s.support) ASSERT_EQ(t.parent(v), s.support);
    }
  }

  if (d.order() < 2) return;
  const TreeProfile p = tree_profile(t);
  const PackingBounds b = t1_bounds(t);
  ASSERT_LE(b.lower, rho);
  ASSERT_LE(rho, b.upper);
  ASSERT_EQ(b.upper, ceil_half(p.n - p.leaves + p.supports));
  ASSERT_EQ(rho_equals_s_test(t).holds, rho == p.supports);
  ASSERT_EQ(rho_upper_characterization(t), rho == b.upper);
  const PhiResult phi = phi_membership(t);
  ASSERT_EQ(phi.member, gamma == ceil_half(d.order()));
  ASSERT_EQ(phi.certificate.has_value(), phi.member);

  bool binary = true;
  for (Vertex v = 0; v < d.order(); ++v) {
    binary = binary && (d.out_degree(v) == 0 || d.out_degree(v) == 2);
  }
  if (binary) ASSERT_LE(2 * gamma, d.order() - 1);
}

}  // namespace

TEST(MaxPacking, Examples) {
  const RdsesResult p = max_packing_rooted_tree(path3());
  EXPECT_EQ(p.chosen, (VertexSet{0, 2}));
  EXPECT_EQ(p.terminal, RdsesTerminal::kIsolated);

  const RdsesResult s = max_packing_rooted_tree(star4());
  EXPECT_EQ(s.chosen, VertexSet{3});
  EXPECT_EQ(s.terminal, RdsesTerminal::kEmpty);
  ASSERT_EQ(s.stages.size(), 1u);
  EXPECT_EQ(s.stages[0].removed, (VertexSet{0, 1, 2, 3}));

  const RdsesResult t = max_packing_rooted_tree(tree(4, {{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(t.chosen, (VertexSet{0, 3}));
}

TEST(GammaDirectedTree, Examples) {
  EXPECT_EQ(gamma_directed_tree(path3().digraph()), 2u);
  EXPECT_EQ(gamma_directed_tree(Digraph(3, {{0, 1}, {2, 1}})), 2u);
  EXPECT_EQ(gamma_directed_tree(star4().digraph()), 1u);
  EXPECT_THROW(gamma_directed_tree(directed_cycle(3).digraph), ContractError);
}

TEST(T1Bounds, Examples) {
  const PackingBounds s = t1_bounds(star4());
  EXPECT_EQ(s.lower, 1u);
  EXPECT_EQ(s.upper, 1u);
  const PackingBounds p = t1_bounds(path3());
  EXPECT_EQ(p.lower, 1u);
  EXPECT_EQ(p.upper, 2u);
  const PackingBounds two = t1_bounds(tree(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(two.lower, 2u);
  EXPECT_EQ(two.upper, 2u);
  EXPECT_THROW(t1_bounds(tree(1, {})), ContractError);
}

TEST(RhoEqualsS, Examples) {
  EXPECT_TRUE(rho_equals_s_test(star4()).holds);
  const ConditionResult p4 = rho_equals_s_test(tree(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_FALSE(p4.holds);
  EXPECT_EQ(p4.reason, "vertex 1 has non-support in-neighbor 0");
  EXPECT_TRUE(rho_equals_s_test(tree(4, {{0, 1}, {1, 2}, {0, 3}})).holds);
}

TEST(PhiMembership, Examples) {
  const PhiResult p2 = phi_membership(tree(2, {{0, 1}}));
  EXPECT_TRUE(p2.member);
  EXPECT_EQ(p2.certificate->shape, PhiShape::kAllPairs);
  const PhiResult p3 = phi_membership(path3());
  EXPECT_TRUE(p3.member);
  EXPECT_EQ(p3.certificate->shape, PhiShape::kPairsAndSingleton);
  EXPECT_FALSE(phi_membership(star4()).member);
  const PhiResult t = phi_membership(tree(4, {{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(t.member);
  EXPECT_EQ(t.certificate->shape, PhiShape::kOneTripleSingleton);
}

TEST(RhoUpperCharacterization, Examples) {
  EXPECT_TRUE(rho_upper_characterization(path3()));
  EXPECT_TRUE(rho_upper_characterization(star4()));
  const RootedTree t = tree(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}});
  EXPECT_EQ(rho_upper_characterization(t), oracle::rho(t.digraph()) == t1_bounds(t).upper);
}

TEST(TreeExhaustive, AllRootedTreesUpToEight) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    oracle::for_each_increasing_tree(n, [&](const Digraph& d) {
      ++count;
      check_tree(d);
    });
  }
  EXPECT_EQ(count, 5914u);
}

class TreeProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(TreeProperties, RandomTrees) {
  const std::uint64_t seed = GetParam();
  check_tree(random_rooted_tree(1 + seed % 14, seed).digraph);
}

TEST_P(TreeProperties, DirectedTreesHaveEqualRhoGamma) {
  const std::uint64_t seed = GetParam();
  const Digraph d = random_directed_tree(1 + seed % 12, seed).digraph;
  EXPECT_EQ(oracle::rho(d), oracle::gamma(d));
  EXPECT_EQ(gamma_directed_tree(d), oracle::gamma(d));
}

TEST_P(TreeProperties, PhiMembersFromCorona) {
  const std::uint64_t seed = GetParam();
  const Digraph d = random_phi_member(1 + seed % 6, seed).digraph;
  const PhiResult phi = phi_membership(RootedTree(d));
  EXPECT_TRUE(phi.member);
  EXPECT_EQ(oracle::gamma(d), d.order() / 2);
}

INSTANTIATE_TEST_SUITE_P(Seeds, TreeProperties, ::testing::Range<std::uint64_t>(1, 201));
