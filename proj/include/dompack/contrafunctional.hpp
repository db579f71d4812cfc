#pragma once

#include <cstddef>
#include <vector>

#include "dompack/digraph.hpp"
#include "dompack/tree_algorithms.hpp"

namespace dompack {

// Unique directed cycle of a connected digraph in which every vertex has
// in-degree 1, listed along its arcs starting at the smallest id. Throws
// ContractError for other digraphs.
std::vector<Vertex> unique_cycle(const Digraph& d);

// Largest distance from the cycle to a vertex; 0 exactly for a cycle.
std::size_t height(const Digraph& d);

// Eliminates closed out-neighborhoods of supports of deepest leaves until
// the remainder is the cycle or has height one. The terminal is always
// kResidual and `terminal_vertices` holds the remainder.
RdsesResult rdses_contrafunctional(const Digraph& d);

struct ContrafunctionalAnalysis {
  std::vector<Vertex> cycle;
  std::size_t height = 0;
  RdsesResult rdses;
  // The elimination stops on an odd directed cycle.
  bool omega = false;
  std::size_t rho = 0;
  std::size_t gamma = 0;
};

// Packing and domination numbers from the elimination: each stage adds one
// to both, an odd cycle C_m contributes (floor(m/2), ceil(m/2)), an even
// cycle m/2 to both, and a height-one remainder is solved as a rooted tree
// after cutting one cycle arc.
ContrafunctionalAnalysis analyze_contrafunctional(const Digraph& d);

}  // namespace dompack
