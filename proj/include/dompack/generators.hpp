#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dompack/digraph.hpp"

namespace dompack {

enum class Family {
  kStar,
  kPath,
  kCycle,
  kTournament,
  kRootedTree,
  kDirectedTree,
  kContrafunctional,
  kTheta,
  kSigma,
  kSlaterTree,
  kPhiMember,
  kRandom,
};

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& name);

// Parameter values a construction guarantees, with the result each rests on.
struct CertifiedValue {
  std::size_t value;
  std::string anchor;
};

struct Certificate {
  std::optional<CertifiedValue> rho;
  std::optional<CertifiedValue> gamma;
  std::optional<CertifiedValue> gamma_t;
  std::optional<CertifiedValue> gamma_o;
  std::optional<CertifiedValue> slater_out;
  // A set attaining the certified gamma_t / gamma_o, when the construction
  // provides one.
  std::optional<VertexSet> witness;
};

struct GeneratedInstance {
  Digraph digraph;
  Family family;
  Certificate expected;
  std::optional<std::uint64_t> seed;
};

GeneratedInstance directed_star(std::size_t n);
GeneratedInstance directed_path(std::size_t n);
GeneratedInstance directed_cycle(std::size_t n);

// Each vertex i > 0 of a hidden skeleton picks a parent uniformly among
// 0..i-1; labels are then shuffled. Deterministic in (n, seed).
GeneratedInstance random_rooted_tree(std::size_t n, std::uint64_t seed);
// Rooted skeleton with every arc flipped by a coin.
GeneratedInstance random_directed_tree(std::size_t n, std::uint64_t seed);
GeneratedInstance random_tournament(std::size_t n, std::uint64_t seed);
// Rooted tree plus one arc back into the root, closing a cycle of length at
// least `min_cycle` (2 or 3).
GeneratedInstance random_contrafunctional(std::size_t n, std::uint64_t seed,
                                          std::size_t min_cycle = 3);
// Directed cycle of seeded length m in [2, n] with every other vertex a
// leaf hanging from a cycle vertex (height at most one).
GeneratedInstance random_height_one_contrafunctional(std::size_t n, std::uint64_t seed);
// Corona of a random rooted tree on m vertices: every vertex gets one extra
// leaf. Order 2m with domination number m = n/2.
GeneratedInstance random_phi_member(std::size_t m, std::uint64_t seed);
// Each ordered pair becomes an arc with probability `density`.
GeneratedInstance random_digraph(std::size_t n, double density, std::uint64_t seed);

// r arcs (u_i, v_i); u_i gets k private out-neighbors and v_i gets k + 1.
// With `extra_arcs`, seeded arcs leave the added vertices (out-degree at most
// k + 1) toward any vertex. Order r(2k + 3), total domination number 2r.
// Vertex u_i is 2i, v_i is 2i + 1.
GeneratedInstance theta_instance(std::size_t r, std::size_t k, bool extra_arcs,
                                 std::uint64_t seed = 0);

// Base connected contrafunctional digraph, with k - deg+(v) private
// out-neighbors added to each base vertex v; optional seeded arcs leave the
// added vertices (out-degree at most k). Order k|base|, open domination
// number |base|. Base vertices keep their ids.
GeneratedInstance sigma_instance(const Digraph& base, std::size_t k, bool extra_arcs,
                                 std::uint64_t seed = 0);

// Directed path v_1..v_a (ids 0..a-1), 2a leaves below each v_i, and for
// i = 1..b one pendant arc (v_i, x) replaced by v_i -> w_i -> x. Order
// 2a^2 + a + b, out-Slater number a, total domination number a + b.
GeneratedInstance slater_realization_tree(std::size_t a, std::size_t b);

// Checks that `s` certifies membership in the family built by
// theta_instance: s induces a perfect matching of arcs, every vertex outside
// s has exactly one in-neighbor in s, and every vertex of s has maximum
// out-degree.
bool theta_structure(const Digraph& d, const VertexSet& s);

// Counterpart for sigma_instance: s induces a contrafunctional digraph,
// every vertex outside s has exactly one in-neighbor in s, and every
// vertex of s has maximum out-degree.
bool sigma_structure(const Digraph& d, const VertexSet& s);

// Lexicographically least set of size 2n/(2*maxout+1) (if integral)
// passing theta_structure. Exhaustive; throws GuardExceeded above 64.
std::optional<VertexSet> find_theta_core(const Digraph& d);
// Lexicographically least set of size n/maxout (if integral) passing
// sigma_structure.
std::optional<VertexSet> find_sigma_core(const Digraph& d);

// 64-bit mixer used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace dompack
