#include "dompack/tree_algorithms.hpp"

#include <stdexcept>

#include "dompack/errors.hpp"
#include "dompack/solvers.hpp"
#include "dompack/transforms.hpp"

namespace dompack {

RdsesResult max_packing_rooted_tree(const RootedTree& t) {
  RdsesResult result;
  const std::vector<Vertex> order = bfs_order(t);
  std::vector<char> alive(t.order(), 1);
  std::vector<Vertex> chosen;

  std::size_t cursor = order.size();
  while (true) {
    while (cursor > 0 && !alive[order[cursor - 1]]) --cursor;
    if (cursor == 0) break;
    const Vertex v = order[cursor - 1];
    chosen.push_back(v);

    const auto parent = t.parent(v);
    if (!parent) {
      // Only the root is left.
      alive[v] = 0;
      result.terminal = RdsesTerminal::kIsolated;
      result.terminal_vertices = VertexSet{v};
      result.partition.push_back(VertexSet{v});
      break;
    }
    std::vector<Vertex> block{*parent};
    alive[*parent] = 0;
    for (Vertex c : t.children(*parent)) {
      if (alive[c]) {
        alive[c] = 0;
        block.push_back(c);
      }
    }
    VertexSet removed(std::move(block));
    result.partition.push_back(removed);
    result.stages.push_back({v, *parent, std::move(removed)});
  }
  result.chosen = VertexSet(std::move(chosen));
  return result;
}

std::size_t gamma_directed_tree(const Digraph& d) {
  const Classification c = classify(d);
  if (!c.directed_tree) throw ContractError("digraph is not a directed tree");
  if (c.tree) return max_packing_rooted_tree(*c.tree).chosen.size();
  const std::size_t gamma = gamma_exact(d).value;
  const std::size_t rho = rho_exact(d).value;
  if (gamma != rho) {
    throw std::logic_error("packing and domination numbers differ on a directed tree");
  }
  return gamma;
}

TreeProfile tree_profile(const RootedTree& t) {
  TreeProfile p;
  p.n = t.order();
  p.height = t.height();
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) ++p.leaves;
    if (t.is_support(v)) ++p.supports;
  }
  return p;
}

PackingBounds t1_bounds(const RootedTree& t) {
  if (t.order() < 2) throw ContractError("packing bounds need order >= 2");
  const TreeProfile p = tree_profile(t);
  return {p.supports, (p.n - p.leaves + p.supports + 1) / 2};
}

ConditionResult rho_equals_s_test(const RootedTree& t) {
  if (t.order() < 2) throw ContractError("condition needs order >= 2");
  const TreeProfile p = tree_profile(t);
  if (p.n == p.leaves + p.supports) {
    return {true, "every vertex is a leaf or a support vertex"};
  }
  // Non-root offenders are reported first; an inner non-support root has no
  // in-neighbor at all and fails last.
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v) || t.is_support(v)) continue;
    const auto parent = t.parent(v);
    if (parent && !t.is_support(*parent)) {
      return {false, "vertex " + std::to_string(v) + " has non-support in-neighbor " +
                         std::to_string(*parent)};
    }
  }
  const Vertex root = t.root();
  if (!t.is_leaf(root) && !t.is_support(root)) {
    return {false, "root " + std::to_string(root) + " is neither a leaf nor a support vertex"};
  }
  return {true, "every inner non-support vertex hangs from a support vertex"};
}

PhiResult phi_membership(const RootedTree& t) {
  if (t.order() < 2) throw ContractError("family membership needs order >= 2");
  const RdsesResult r = max_packing_rooted_tree(t);
  PhiResult result;
  result.member = r.chosen.size() == (t.order() + 1) / 2;
  if (!result.member) return result;

  std::size_t pairs = 0;
  std::size_t triples = 0;
  for (const RdsesStage& s : r.stages) {
    if (s.removed.size() == 2) ++pairs;
    if (s.removed.size() == 3) ++triples;
  }
  const bool stars_ok = pairs + triples == r.stages.size();
  PhiShape shape;
  if (r.terminal == RdsesTerminal::kEmpty && stars_ok && triples == 0) {
    shape = PhiShape::kAllPairs;
  } else if (r.terminal == RdsesTerminal::kIsolated && stars_ok && triples == 0) {
    shape = PhiShape::kPairsAndSingleton;
  } else if (r.terminal == RdsesTerminal::kIsolated && stars_ok && triples == 1) {
    shape = PhiShape::kOneTripleSingleton;
  } else {
    throw std::logic_error("elimination count matches ceil(n/2) but the star partition does not");
  }
  result.certificate = PhiCertificate{shape, r.partition};
  return result;
}

bool rho_upper_characterization(const RootedTree& t) {
  return phi_membership(reduce_support_leaves(t)).member;
}

std::string to_string(PhiShape shape) {
  switch (shape) {
    case PhiShape::kAllPairs:
      return "pairs";
    case PhiShape::kPairsAndSingleton:
      return "pairs+singleton";
    case PhiShape::kOneTripleSingleton:
      return "triple+pairs+singleton";
  }
  return "unknown";
}

}  // namespace dompack
