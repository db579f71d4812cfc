#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dompack/digraph.hpp"

namespace dompack {

// Deletion order: order[0] is deleted first and is simplicial in the whole
// graph, order[i] is simplicial once order[0..i-1] are gone.
struct EliminationOrdering {
  std::vector<Vertex> order;
};

// Greedy simplicial elimination of a symmetric digraph, lowest id first.
// Empty optional when the graph is not chordal.
std::optional<EliminationOrdering> simplicial_elimination(const Digraph& g);

bool is_simplicial_elimination(const Digraph& g, const EliminationOrdering& e);

// Induced k-sun: core v_1..v_k with cycle edges v_i v_{i+1} (chords allowed)
// and pairwise nonadjacent outer vertices, u_i adjacent to exactly v_i and
// v_{i+1} among the core.
struct KSun {
  std::vector<Vertex> core;
  std::vector<Vertex> outer;
};

inline constexpr std::size_t kDefaultSunK = 4;
inline constexpr std::size_t kSunSearchGuard = 16;

// Lowest witness for k = 3..k_max. Throws GuardExceeded above 16 vertices.
std::optional<KSun> find_k_sun(const Digraph& g, std::size_t k_max = kDefaultSunK);

bool is_k_sun(const Digraph& g, const KSun& sun);

// Chordal and free of k-suns for k <= k_max. Bounded k makes this a
// desk-scale verdict rather than a full recognition.
struct ChordalVerdict {
  bool chordal = false;
  std::optional<EliminationOrdering> ordering;
  std::optional<KSun> sun;
  std::size_t k_max = kDefaultSunK;
  bool strongly_chordal = false;
};

ChordalVerdict strongly_chordal_desk(const Digraph& g, std::size_t k_max = kDefaultSunK);

}  // namespace dompack
