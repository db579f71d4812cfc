#include <gtest/gtest.h>

#include "dompack/contrafunctional.hpp"
#include "dompack/errors.hpp"
#include "dompack/generators.hpp"
#include "dompack/transforms.hpp"
#include "oracle.hpp"

using namespace dompack;

namespace {

Digraph c3_tail() { return Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }
Digraph c3_path() { return Digraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}}); }
// C3 with one pendant leaf per cycle vertex.
Digraph c3_sun() { return Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}}); }

}  // namespace

TEST(UniqueCycle, Examples) {
  EXPECT_EQ(unique_cycle(directed_cycle(3).digraph), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(unique_cycle(c3_tail()), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW(unique_cycle(directed_path(3).digraph), ContractError);
  // Opposite pair is a 2-cycle.
  EXPECT_EQ(unique_cycle(Digraph(2, {{0, 1}, {1, 0}})), (std::vector<Vertex>{0, 1}));
}

TEST(Height, Examples) {
  EXPECT_EQ(height(directed_cycle(4).digraph), 0u);
  EXPECT_EQ(height(c3_tail()), 1u);
  EXPECT_EQ(height(c3_path()), 2u);
}

TEST(RdsesContrafunctional, Examples) {
  const RdsesResult r = rdses_contrafunctional(c3_path());
  ASSERT_EQ(r.stages.size(), 1u);
  EXPECT_EQ(r.stages[0].leaf, 4u);
  EXPECT_EQ(r.stages[0].support, 3u);
  EXPECT_EQ(r.stages[0].removed, (VertexSet{3, 4}));
  EXPECT_EQ(r.terminal, RdsesTerminal::kResidual);
  EXPECT_EQ(r.terminal_vertices, (VertexSet{0, 1, 2}));

  const RdsesResult c4 = rdses_contrafunctional(directed_cycle(4).digraph);
  EXPECT_TRUE(c4.stages.empty());
  EXPECT_EQ(c4.terminal_vertices, VertexSet::all(4));

  const RdsesResult sun = rdses_contrafunctional(c3_sun());
  EXPECT_TRUE(sun.stages.empty());
  EXPECT_EQ(sun.terminal_vertices, VertexSet::all(6));
}

TEST(AnalyzeContrafunctional, Examples) {
  const auto c3 = analyze_contrafunctional(directed_cycle(3).digraph);
  EXPECT_EQ(c3.rho, 1u);
  EXPECT_EQ(c3.gamma, 2u);
  EXPECT_TRUE(c3.omega);
  const auto c4 = analyze_contrafunctional(directed_cycle(4).digraph);
  EXPECT_EQ(c4.rho, 2u);
  EXPECT_EQ(c4.gamma, 2u);
  EXPECT_FALSE(c4.omega);
  const auto sun = analyze_contrafunctional(c3_sun());
  EXPECT_EQ(sun.rho, 3u);
  EXPECT_EQ(sun.gamma, 3u);
  EXPECT_FALSE(sun.omega);
  EXPECT_EQ(oracle::rho(c3_sun()), 3u);
  EXPECT_EQ(oracle::gamma(c3_sun()), 3u);
}

TEST(AnalyzeContrafunctional, RejectsOtherDigraphs) {
  EXPECT_THROW(analyze_contrafunctional(directed_star(4).digraph), ContractError);
  // Two disjoint cycles.
  EXPECT_THROW(analyze_contrafunctional(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})),
               ContractError);
}

class ContrafunctionalProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ContrafunctionalProperties, CycleAndCuts) {
  const std::uint64_t seed = GetParam();
  const std::size_t min_cycle = seed % 2 == 0 ? 2 : 3;
  const Digraph d = random_contrafunctional(min_cycle + seed % 12, seed, min_cycle).digraph;
  const auto cycle = unique_cycle(d);
  ASSERT_GE(cycle.size(), min_cycle);
  std::size_t cycle_arcs = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex u = cycle[i];
    const Vertex v = cycle[(i + 1) % cycle.size()];
    ASSERT_TRUE(d.has_arc(u, v));
    const auto t = RootedTree::try_make(remove_arc(d, u, v));
    ASSERT_TRUE(t);
    EXPECT_EQ(t->root(), v);
    ++cycle_arcs;
  }
  // Exactly the cycle arcs leave a rooted tree behind.
  std::size_t tree_cuts = 0;
  for (const Arc& a : d.arcs()) {
    tree_cuts += RootedTree::try_make(remove_arc(d, a.tail, a.head)).has_value() ? 1 : 0;
  }
  EXPECT_EQ(tree_cuts, cycle_arcs);
}

TEST_P(ContrafunctionalProperties, AnalysisMatchesOracle) {
  const std::uint64_t seed = GetParam();
  const std::size_t min_cycle = seed % 2 == 0 ? 2 : 3;
  const Digraph d = random_contrafunctional(min_cycle + seed % 12, seed, min_cycle).digraph;
  const auto a = analyze_contrafunctional(d);
  const std::size_t rho = oracle::rho(d);
  const std::size_t gamma = oracle::gamma(d);
  EXPECT_EQ(a.rho, rho);
  EXPECT_EQ(a.gamma, gamma);
  EXPECT_EQ(gamma - rho == 1, a.omega);
  EXPECT_LE(gamma - rho, 1u);
  EXPECT_EQ(a.height, height(d));
}

TEST_P(ContrafunctionalProperties, HeightOneHasGammaEqualRho) {
  const std::uint64_t seed = GetParam();
  const Digraph d = random_height_one_contrafunctional(2 + seed % 12, seed).digraph;
  ASSERT_LE(height(d), 1u);
  if (height(d) == 1) {
    EXPECT_EQ(oracle::rho(d), oracle::gamma(d));
  }
  const auto a = analyze_contrafunctional(d);
  EXPECT_EQ(a.rho, oracle::rho(d));
  EXPECT_EQ(a.gamma, oracle::gamma(d));
}

TEST_P(ContrafunctionalProperties, RootedTreePlusRootArc) {
  const std::uint64_t seed = GetParam();
  const Digraph d = random_contrafunctional(3 + seed % 10, seed).digraph;
  const auto cycle = unique_cycle(d);
  const Vertex root = cycle[0];
  const Vertex into_root = d.in(root).front();
  const RootedTree t(remove_arc(d, into_root, root));
  std::vector<Arc> arcs(t.digraph().arcs().begin(), t.digraph().arcs().end());
  arcs.push_back({into_root, root});
  EXPECT_EQ(Digraph(d.order(), arcs), d);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ContrafunctionalProperties, ::testing::Range<std::uint64_t>(1, 151));
