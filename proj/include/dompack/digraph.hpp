#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dompack {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail;
  Vertex head;

  auto operator<=>(const Arc&) const = default;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet all(std::size_t n);

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const Vertex> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Largest member plus one; 0 when empty.
  std::size_t bound() const noexcept {
    return members_.empty() ? 0 : members_.back() + 1;
  }

  bool operator==(const VertexSet&) const = default;
  // Lexicographic order on the sorted member sequence.
  auto operator<=>(const VertexSet& other) const = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable simple digraph on vertices 0..n-1. Loops and repeated arcs are
// rejected; opposite arc pairs are allowed.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  // Arcs in lexicographic (tail, head) order.
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in(Vertex v) const { return in_.at(v); }
  // Neighbors in the underlying graph (either direction, each listed once).
  std::span<const Vertex> neighbors(Vertex v) const { return und_.at(v); }

  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }
  std::size_t degree(Vertex v) const { return und_.at(v).size(); }

  bool has_arc(Vertex u, Vertex v) const;

  // Every arc has its opposite; such a digraph stands for an undirected graph.
  bool is_symmetric() const;

  bool operator==(const Digraph& other) const {
    return order() == other.order() && arcs_ == other.arcs_;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::vector<Vertex>> und_;
};

// The symmetric digraph of an undirected edge list.
Digraph undirected(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
Digraph undirected(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

struct DegreeStats {
  std::size_t max_out = 0;
  std::size_t max_in = 0;
  std::size_t min_underlying = 0;
  std::size_t max_underlying = 0;
  // Minimum in-degree over the vertices of minimum underlying degree.
  std::size_t delta_star = 0;

  bool operator==(const DegreeStats&) const = default;
};

VertexSet in_neighbors(const Digraph& d, Vertex v, bool closed = false);
VertexSet out_neighbors(const Digraph& d, Vertex v, bool closed = false);

DegreeStats degree_stats(const Digraph& d);

// Number of arcs (x, y) with x in `from` and y in `to`.
std::size_t arc_cut(const Digraph& d, const VertexSet& from, const VertexSet& to);

bool is_connected(const Digraph& d);

// The subdigraph induced by `keep`, relabelled 0..|keep|-1 in increasing
// order of original id. `original[i]` is the original id of vertex i.
struct InducedSubgraph {
  Digraph graph;
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& keep);

// A digraph with one in-degree-0 root whose other vertices all have
// in-degree 1, connected.
class RootedTree {
 public:
  // Throws ContractError when `d` is not a rooted tree.
  explicit RootedTree(Digraph d);

  static std::optional<RootedTree> try_make(const Digraph& d);

  const Digraph& digraph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  Vertex root() const noexcept { return root_; }
  std::optional<Vertex> parent(Vertex v) const;
  std::span<const Vertex> children(Vertex v) const { return graph_.out(v); }
  std::size_t depth(Vertex v) const { return depth_.at(v); }
  std::size_t height() const noexcept { return height_; }

  bool is_leaf(Vertex v) const { return graph_.out_degree(v) == 0; }
  bool is_support(Vertex v) const;

 private:
  struct Unchecked {};
  RootedTree(Unchecked, Digraph d, Vertex root);

  Digraph graph_;
  Vertex root_ = 0;
  std::vector<std::size_t> depth_;
  std::size_t height_ = 0;
};

struct Classification {
  bool connected = false;
  bool rooted_tree = false;
  bool directed_tree = false;
  bool contrafunctional = false;
  bool tournament = false;
  std::optional<RootedTree> tree;
};

Classification classify(const Digraph& d);

// Level order from the root; ties within a level by ascending id.
std::vector<Vertex> bfs_order(const RootedTree& t);

}  // namespace dompack
