#include "dompack/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dompack/errors.hpp"

namespace dompack {

SplitTransform build_split(const Digraph& d) {
  if (d.order() == 0) throw ContractError("split transform needs at least one vertex");
  const auto n = static_cast<Vertex>(d.order());
  std::vector<Arc> arcs;
  arcs.reserve(n + 2 * d.arc_count());
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, v + n});
  for (const Arc& a : d.arcs()) {
    arcs.push_back({a.tail, a.head});
    arcs.push_back({a.tail, a.head + n});
  }

  std::vector<Arc> edges;
  edges.reserve(2 * arcs.size());
  for (const Arc& a : arcs) {
    edges.push_back(a);
    edges.push_back({a.head, a.tail});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  return {d, Digraph(2 * n, std::move(arcs)), Digraph(2 * n, std::move(edges))};
}

RootedTree reduce_support_leaves(const RootedTree& t) {
  if (t.order() < 2) throw ContractError("support-leaf reduction needs order >= 2");
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (!t.is_leaf(v)) {
      keep.push_back(v);
      continue;
    }
    const Vertex support = *t.parent(v);
    // Children lists are sorted, so the first leaf child is the lowest id.
    const auto siblings = t.children(support);
    const auto first_leaf = std::find_if(siblings.begin(), siblings.end(),
                                         [&](Vertex c) { return t.is_leaf(c); });
    if (*first_leaf == v) keep.push_back(v);
  }
  return RootedTree(induced_subgraph(t.digraph(), VertexSet(std::move(keep))).graph);
}

Digraph remove_arc(const Digraph& d, Vertex u, Vertex v) {
  if (u >= d.order() || v >= d.order() || !d.has_arc(u, v)) {
    throw std::out_of_range("arc (" + std::to_string(u) + "," + std::to_string(v) +
                            ") not present");
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count() - 1);
  for (const Arc& a : d.arcs()) {
    if (a != Arc{u, v}) arcs.push_back(a);
  }
  return Digraph(d.order(), std::move(arcs));
}

}  // namespace dompack
