#pragma once

#include "dompack/digraph.hpp"

namespace dompack {

// Vertex splitting of a digraph D on n vertices: every v gets a copy
// v' = v + n with arc (v, v'), and every arc (u, v) of D yields (u, v) and
// (u, v'). `split_graph` is the underlying graph of `split_digraph`, stored
// symmetrically. Domination and packing numbers survive the transform.
struct SplitTransform {
  Digraph source;
  Digraph split_digraph;
  Digraph split_graph;

  Vertex primed(Vertex v) const { return v + static_cast<Vertex>(source.order()); }
  Vertex unprimed(Vertex v) const {
    return v >= source.order() ? v - static_cast<Vertex>(source.order()) : v;
  }
};

SplitTransform build_split(const Digraph& d);

// Keeps exactly one leaf (the lowest id) below every support vertex. The
// result is relabelled compactly, preserving the relative order of ids.
RootedTree reduce_support_leaves(const RootedTree& t);

// Throws std::out_of_range when (u, v) is not an arc of `d`.
Digraph remove_arc(const Digraph& d, Vertex u, Vertex v);

}  // namespace dompack
