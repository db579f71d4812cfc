#include "dompack/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "dompack/errors.hpp"

namespace dompack {

namespace {

void check_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " +
                            std::to_string(d.order()));
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when both were already in one set.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return VertexSet(std::move(v));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs)
    : arcs_(std::move(arcs)), out_(n), in_(n), und_(n) {
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc a = arcs_[i];
    if (a.tail >= n || a.head >= n) {
      throw ContractError("arc (" + std::to_string(a.tail) + "," +
                          std::to_string(a.head) + ") has an endpoint outside [0," +
                          std::to_string(n) + ")");
    }
    if (a.tail == a.head) {
      throw ContractError("loop at vertex " + std::to_string(a.tail));
    }
    if (i > 0 && arcs_[i - 1] == a) {
      throw ContractError("repeated arc (" + std::to_string(a.tail) + "," +
                          std::to_string(a.head) + ")");
    }
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
    und_[a.tail].push_back(a.head);
    und_[a.head].push_back(a.tail);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
  for (auto& list : und_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const auto succ = out(u);
  return std::binary_search(succ.begin(), succ.end(), v);
}

bool Digraph::is_symmetric() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [this](const Arc& a) { return has_arc(a.head, a.tail); });
}

Digraph undirected(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [a, b] : edges) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  }
  return Digraph(n, std::move(arcs));
}

Digraph undirected(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return undirected(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

VertexSet in_neighbors(const Digraph& d, Vertex v, bool closed) {
  check_vertex(d, v);
  std::vector<Vertex> members(d.in(v).begin(), d.in(v).end());
  if (closed) members.push_back(v);
  return VertexSet(std::move(members));
}

VertexSet out_neighbors(const Digraph& d, Vertex v, bool closed) {
  check_vertex(d, v);
  std::vector<Vertex> members(d.out(v).begin(), d.out(v).end());
  if (closed) members.push_back(v);
  return VertexSet(std::move(members));
}

DegreeStats degree_stats(const Digraph& d) {
  DegreeStats stats;
  if (d.order() == 0) return stats;
  stats.min_underlying = d.degree(0);
  for (Vertex v = 0; v < d.order(); ++v) {
    stats.max_out = std::max(stats.max_out, d.out_degree(v));
    stats.max_in = std::max(stats.max_in, d.in_degree(v));
    stats.min_underlying = std::min(stats.min_underlying, d.degree(v));
    stats.max_underlying = std::max(stats.max_underlying, d.degree(v));
  }
  stats.delta_star = stats.max_in;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.degree(v) == stats.min_underlying) {
      stats.delta_star = std::min(stats.delta_star, d.in_degree(v));
    }
  }
  return stats;
}

std::size_t arc_cut(const Digraph& d, const VertexSet& from, const VertexSet& to) {
  std::size_t count = 0;
  for (Vertex u : from) {
    check_vertex(d, u);
    for (Vertex v : d.out(u)) {
      if (to.contains(v)) ++count;
    }
  }
  return count;
}

bool is_connected(const Digraph& d) {
  if (d.order() == 0) return true;
  std::vector<char> seen(d.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : d.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == d.order();
}

InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& keep) {
  std::vector<std::int64_t> index(d.order(), -1);
  std::vector<Vertex> original;
  original.reserve(keep.size());
  for (Vertex v : keep) {
    check_vertex(d, v);
    index[v] = static_cast<std::int64_t>(original.size());
    original.push_back(v);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (index[a.tail] >= 0 && index[a.head] >= 0) {
      arcs.push_back({static_cast<Vertex>(index[a.tail]),
                      static_cast<Vertex>(index[a.head])});
    }
  }
  return {Digraph(original.size(), std::move(arcs)), std::move(original)};
}

namespace {

// Root of `d` if it is a rooted tree.
std::optional<Vertex> rooted_tree_root(const Digraph& d) {
  const std::size_t n = d.order();
  if (n == 0 || d.arc_count() != n - 1) return std::nullopt;
  std::optional<Vertex> root;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t in = d.in_degree(v);
    if (in == 0) {
      if (root) return std::nullopt;
      root = v;
    } else if (in != 1) {
      return std::nullopt;
    }
  }
  if (!root || !is_connected(d)) return std::nullopt;
  return root;
}

}  // namespace

RootedTree::RootedTree(Digraph d) {
  const auto root = rooted_tree_root(d);
  if (!root) throw ContractError("digraph is not a rooted tree");
  *this = RootedTree(Unchecked{}, std::move(d), *root);
}

RootedTree::RootedTree(Unchecked, Digraph d, Vertex root)
    : graph_(std::move(d)), root_(root), depth_(graph_.order(), 0) {
  std::vector<Vertex> stack{root_};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : graph_.out(v)) {
      depth_[c] = depth_[v] + 1;
      height_ = std::max(height_, depth_[c]);
      stack.push_back(c);
    }
  }
}

std::optional<RootedTree> RootedTree::try_make(const Digraph& d) {
  const auto root = rooted_tree_root(d);
  if (!root) return std::nullopt;
  return RootedTree(Unchecked{}, d, *root);
}

std::optional<Vertex> RootedTree::parent(Vertex v) const {
  const auto pred = graph_.in(v);
  if (pred.empty()) return std::nullopt;
  return pred.front();
}

bool RootedTree::is_support(Vertex v) const {
  const auto succ = graph_.out(v);
  return std::any_of(succ.begin(), succ.end(),
                     [this](Vertex c) { return is_leaf(c); });
}

Classification classify(const Digraph& d) {
  Classification c;
  const std::size_t n = d.order();
  c.connected = is_connected(d);

  c.contrafunctional = n > 0;
  for (Vertex v = 0; v < n; ++v) {
    if (d.in_degree(v) != 1) c.contrafunctional = false;
  }

  c.tournament = true;
  for (Vertex u = 0; u < n && c.tournament; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (d.has_arc(u, v) == d.has_arc(v, u)) {
        c.tournament = false;
        break;
      }
    }
  }

  bool opposite_pair = false;
  DisjointSets sets(n);
  bool acyclic = true;
  for (const Arc& a : d.arcs()) {
    if (d.has_arc(a.head, a.tail)) {
      opposite_pair = true;
    } else if (!sets.unite(a.tail, a.head)) {
      acyclic = false;
    }
  }
  c.directed_tree = c.connected && acyclic && !opposite_pair && n > 0;

  c.tree = RootedTree::try_make(d);
  c.rooted_tree = c.tree.has_value();
  return c;
}

std::vector<Vertex> bfs_order(const RootedTree& t) {
  std::vector<Vertex> order;
  order.reserve(t.order());
  std::vector<Vertex> level{t.root()};
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    order.insert(order.end(), level.begin(), level.end());
    std::vector<Vertex> next;
    for (Vertex v : level) {
      const auto children = t.children(v);
      next.insert(next.end(), children.begin(), children.end());
    }
    level = std::move(next);
  }
  return order;
}

}  // namespace dompack
