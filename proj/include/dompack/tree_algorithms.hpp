#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dompack/digraph.hpp"

namespace dompack {

// One elimination step: `leaf` is a deepest remaining leaf, `support` its
// in-neighbor, and `removed` the closed out-neighborhood of `support` in the
// remaining digraph.
struct RdsesStage {
  Vertex leaf;
  Vertex support;
  VertexSet removed;
};

enum class RdsesTerminal {
  kEmpty,     // every vertex was eliminated
  kIsolated,  // a single vertex (the root) was left
  kResidual,  // stopped on a cycle or height-one contrafunctional digraph
};

// Record of a recursive directed star elimination. Ids are those of the
// input digraph.
struct RdsesResult {
  std::vector<RdsesStage> stages;
  RdsesTerminal terminal = RdsesTerminal::kEmpty;
  // Isolated vertex, or the vertex set of the residual digraph.
  VertexSet terminal_vertices;
  VertexSet chosen;
  // Stage blocks in order, then the terminal vertices as a last block when
  // nonempty.
  std::vector<VertexSet> partition;
};

// Maximum packing of a rooted tree by repeatedly taking the last vertex of
// the breadth-first order and deleting its parent with all of the parent's
// remaining children. Linear time. `chosen` is a maximum packing and its
// size is also the domination number.
RdsesResult max_packing_rooted_tree(const RootedTree& t);

// Domination number of a directed tree: linear for rooted trees, exhaustive
// (and checked against the packing number) otherwise.
std::size_t gamma_directed_tree(const Digraph& d);

struct TreeProfile {
  std::size_t n = 0;
  std::size_t leaves = 0;
  std::size_t supports = 0;
  std::size_t height = 0;
};

TreeProfile tree_profile(const RootedTree& t);

struct PackingBounds {
  std::size_t lower = 0;  // number of support vertices
  std::size_t upper = 0;  // ceil((n - leaves + supports) / 2)
};

PackingBounds t1_bounds(const RootedTree& t);

struct ConditionResult {
  bool holds = false;
  std::string reason;
};

// Structural condition for the packing number to equal the number of support
// vertices: n = leaves + supports, or every vertex that is neither a support
// nor a leaf has a support vertex as in-neighbor.
ConditionResult rho_equals_s_test(const RootedTree& t);

enum class PhiShape {
  kAllPairs,           // partition into 2-vertex stars
  kPairsAndSingleton,  // 2-vertex stars plus the isolated root
  kOneTripleSingleton, // one 3-vertex star, the rest 2-vertex, plus the root
};

struct PhiCertificate {
  PhiShape shape;
  std::vector<VertexSet> blocks;
};

struct PhiResult {
  bool member = false;
  std::optional<PhiCertificate> certificate;
};

// Membership in the family of rooted trees with domination number
// ceil(n/2), decided through the elimination count. Members come with the
// star partition found by the elimination.
PhiResult phi_membership(const RootedTree& t);

// Packing number equals ceil((n - leaves + supports)/2) iff the support-leaf
// reduction of t is in the family above.
bool rho_upper_characterization(const RootedTree& t);

std::string to_string(PhiShape shape);

}  // namespace dompack
