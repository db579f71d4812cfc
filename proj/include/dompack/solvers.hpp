#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "dompack/digraph.hpp"

namespace dompack {

// Exact value of a nonnegative rational, kept in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  bool operator==(const Ratio&) const = default;
};

// x >= r, compared exactly.
bool at_least(std::int64_t x, const Ratio& r);

struct Solution {
  std::size_t value = 0;
  VertexSet witness;
};

inline constexpr std::size_t kDefaultSolverGuard = 20;
// Subset masks are 64 bits wide.
inline constexpr std::size_t kMaxSolverGuard = 64;

// Order limit for exhaustive search: DOMPACK_SOLVER_GUARD if set to a valid
// value in [1, 64], else 20.
std::size_t solver_guard();

struct SolverOptions {
  std::size_t guard = solver_guard();
};

bool is_packing(const Digraph& d, const VertexSet& b);
// Pairwise form: no arcs inside b and disjoint closed in-neighborhoods.
bool is_packing_pairwise(const Digraph& d, const VertexSet& b);
bool is_dominating(const Digraph& d, const VertexSet& s);
bool is_total_dominating(const Digraph& d, const VertexSet& s);
bool is_open_dominating(const Digraph& d, const VertexSet& s);

// Exhaustive optima. Witnesses are the lexicographically least optimal set.
// All throw GuardExceeded when d.order() > options.guard.
Solution rho_exact(const Digraph& d, const SolverOptions& options = {});
Solution gamma_exact(const Digraph& d, const SolverOptions& options = {});
// Undefined when the underlying graph has an isolated vertex.
std::optional<Solution> gamma_t_exact(const Digraph& d, const SolverOptions& options = {});
// Undefined when some vertex has in-degree 0.
std::optional<Solution> gamma_o_exact(const Digraph& d, const SolverOptions& options = {});

// Domination and 2-packing numbers of the undirected graph represented by a
// symmetric digraph. Throw ContractError on asymmetric input.
Solution undirected_gamma_exact(const Digraph& g, const SolverOptions& options = {});
Solution undirected_rho_exact(const Digraph& g, const SolverOptions& options = {});

// Out-Slater number: least k with floor(k/2) + (k largest out-degrees) >= n.
std::optional<std::size_t> slater_out(const Digraph& d);

// Degree-based lower bound on the packing number.
Ratio rho_lower_bound(const Digraph& d);

// Greedy packing: repeatedly take a remaining vertex of minimum underlying
// degree (then minimum in-degree, then lowest id), then discard its closed
// underlying neighborhood and every out-neighbor of its in-neighbors.
VertexSet greedy_packing(const Digraph& d);

struct ParameterReport {
  Solution rho;
  Solution gamma;
  std::optional<Solution> gamma_t;
  std::optional<Solution> gamma_o;
  std::optional<std::size_t> slater_out;
  DegreeStats stats;
  Ratio rho_lower_bound;
};

ParameterReport compute_parameters(const Digraph& d, const SolverOptions& options = {});

}  // namespace dompack
