#include "dompack/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bitmask.hpp"
#include "dompack/errors.hpp"

namespace dompack {

using detail::bit;
using detail::for_each_bit;
using detail::Mask;
using detail::MaskGraph;

Ratio::Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Ratio::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool at_least(std::int64_t x, const Ratio& r) { return x * r.den >= r.num; }

std::size_t solver_guard() {
  const char* env = std::getenv("DOMPACK_SOLVER_GUARD");
  if (env == nullptr || *env == '\0') return kDefaultSolverGuard;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0 || value > kMaxSolverGuard) return kDefaultSolverGuard;
  return static_cast<std::size_t>(value);
}

namespace {

void check_members(const Digraph& d, const VertexSet& s) {
  if (s.bound() > d.order()) {
    throw std::out_of_range("vertex set exceeds digraph order");
  }
}

void enforce_guard(const Digraph& d, const SolverOptions& options) {
  const std::size_t guard = std::min(options.guard, kMaxSolverGuard);
  if (d.order() > guard) throw GuardExceeded(d.order(), guard);
}

bool has_isolated_vertex(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.degree(v) == 0) return true;
  }
  return false;
}

Mask cover_of(Mask chosen, const std::vector<Mask>& cover) {
  Mask covered = 0;
  for_each_bit(chosen, [&](Vertex v) { covered |= cover[v]; });
  return covered;
}

// Smallest k-subset whose union of `cover` sets is everything and which
// passes `extra`. `coverers[u]` lists the vertices whose cover contains u.
std::optional<Mask> min_cover(std::size_t n, const std::vector<Mask>& cover,
                              const std::function<bool(Mask, Vertex, std::size_t)>& extra_viable,
                              const std::function<bool(Mask)>& extra_accept) {
  const Mask full = detail::full_mask(n);
  std::vector<Mask> coverers(n, 0);
  std::size_t widest = 0;
  for (Vertex v = 0; v < n; ++v) {
    for_each_bit(cover[v], [&](Vertex u) { coverers[u] |= bit(v); });
    widest = std::max<std::size_t>(widest, std::popcount(cover[v]));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    auto viable = [&](Mask mask, Vertex next, std::size_t remaining) {
      const Mask uncovered = full & ~cover_of(mask, cover);
      if (static_cast<std::size_t>(std::popcount(uncovered)) > remaining * widest) return false;
      const Mask reachable = next >= 64 ? Mask{0} : full & ~((Mask{1} << next) - 1);
      bool ok = true;
      for_each_bit(uncovered, [&](Vertex u) {
        if ((coverers[u] & reachable) == 0) ok = false;
      });
      return ok && extra_viable(mask, next, remaining);
    };
    auto accept = [&](Mask mask) {
      return (cover_of(mask, cover) & full) == full && extra_accept(mask);
    };
    if (auto found = detail::first_lex_subset(n, k, viable, accept)) return found;
  }
  return std::nullopt;
}

// Largest subset in which no two members conflict; lexicographically least
// among those of maximum size. Conflict-freeness is hereditary, so sizes are
// tried upward until one admits no subset.
Solution max_conflict_free(std::size_t n, const std::function<bool(Vertex, Mask)>& compatible) {
  Solution best{0, {}};
  for (std::size_t k = 1; k <= n; ++k) {
    auto viable = [&](Mask mask, Vertex next, std::size_t) {
      if (next == 0) return true;
      const Vertex added = next - 1;
      return compatible(added, mask & ~bit(added));
    };
    auto found = detail::first_lex_subset(n, k, viable, [](Mask) { return true; });
    if (!found) break;
    best = {k, detail::from_mask(*found)};
  }
  return best;
}

template <class Pred>
Solution checked(Solution s, const Digraph& d, Pred pred, const char* what) {
  if (!pred(d, s.witness)) {
    throw std::logic_error(std::string("solver produced an invalid ") + what + " witness");
  }
  return s;
}

void require_symmetric(const Digraph& g) {
  if (!g.is_symmetric()) throw ContractError("undirected solver requires a symmetric digraph");
}

}  // namespace

bool is_packing(const Digraph& d, const VertexSet& b) {
  check_members(d, b);
  for (Vertex v = 0; v < d.order(); ++v) {
    std::size_t hits = b.contains(v) ? 1 : 0;
    for (Vertex w : d.out(v)) hits += b.contains(w) ? 1 : 0;
    if (hits > 1) return false;
  }
  return true;
}

bool is_packing_pairwise(const Digraph& d, const VertexSet& b) {
  check_members(d, b);
  for (Vertex x : b) {
    for (Vertex y : b) {
      if (x != y && d.has_arc(x, y)) return false;
    }
  }
  const auto members = b.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const VertexSet ni = in_neighbors(d, members[i], true);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      for (Vertex w : in_neighbors(d, members[j], true)) {
        if (ni.contains(w)) return false;
      }
    }
  }
  return true;
}

bool is_dominating(const Digraph& d, const VertexSet& s) {
  check_members(d, s);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (s.contains(v)) continue;
    const auto pred = d.in(v);
    if (std::none_of(pred.begin(), pred.end(), [&](Vertex u) { return s.contains(u); })) {
      return false;
    }
  }
  return true;
}

bool is_total_dominating(const Digraph& d, const VertexSet& s) {
  if (!is_dominating(d, s)) return false;
  for (Vertex u : s) {
    const auto nbrs = d.neighbors(u);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return s.contains(w); })) {
      return false;
    }
  }
  return true;
}

bool is_open_dominating(const Digraph& d, const VertexSet& s) {
  check_members(d, s);
  for (Vertex v = 0; v < d.order(); ++v) {
    const auto pred = d.in(v);
    if (std::none_of(pred.begin(), pred.end(), [&](Vertex u) { return s.contains(u); })) {
      return false;
    }
  }
  return true;
}

Solution rho_exact(const Digraph& d, const SolverOptions& options) {
  enforce_guard(d, options);
  const MaskGraph g(d);
  // x and y clash when some closed out-neighborhood holds both.
  std::vector<Mask> clash(g.n, 0);
  for (Vertex x = 0; x < g.n; ++x) {
    const Mask closed_in = g.in[x] | bit(x);
    for_each_bit(closed_in, [&](Vertex w) { clash[x] |= g.out[w] | bit(w); });
    clash[x] &= ~bit(x);
  }
  auto s = max_conflict_free(g.n, [&](Vertex v, Mask others) { return (clash[v] & others) == 0; });
  return checked(std::move(s), d, is_packing, "packing");
}

Solution gamma_exact(const Digraph& d, const SolverOptions& options) {
  enforce_guard(d, options);
  const MaskGraph g(d);
  std::vector<Mask> cover(g.n);
  for (Vertex v = 0; v < g.n; ++v) cover[v] = g.out[v] | bit(v);
  const auto found = min_cover(
      g.n, cover, [](Mask, Vertex, std::size_t) { return true; }, [](Mask) { return true; });
  if (!found) throw std::logic_error("no dominating set found");
  return checked(Solution{static_cast<std::size_t>(std::popcount(*found)), detail::from_mask(*found)},
                 d, is_dominating, "dominating");
}

std::optional<Solution> gamma_t_exact(const Digraph& d, const SolverOptions& options) {
  enforce_guard(d, options);
  if (d.order() == 0 || has_isolated_vertex(d)) return std::nullopt;
  const MaskGraph g(d);
  std::vector<Mask> cover(g.n);
  for (Vertex v = 0; v < g.n; ++v) cover[v] = g.out[v] | bit(v);
  const Mask full = g.full;
  auto partner_possible = [&](Mask mask, Vertex next, std::size_t remaining) {
    const Mask later = next >= 64 ? Mask{0} : full & ~((Mask{1} << next) - 1);
    bool ok = true;
    for_each_bit(mask, [&](Vertex u) {
      if ((g.und[u] & mask) == 0 && (remaining == 0 || (g.und[u] & later) == 0)) ok = false;
    });
    return ok;
  };
  auto no_isolated = [&](Mask mask) {
    bool ok = true;
    for_each_bit(mask, [&](Vertex u) {
      if ((g.und[u] & mask) == 0) ok = false;
    });
    return ok;
  };
  const auto found = min_cover(g.n, cover, partner_possible, no_isolated);
  if (!found) return std::nullopt;
  return checked(Solution{static_cast<std::size_t>(std::popcount(*found)), detail::from_mask(*found)},
                 d, is_total_dominating, "total dominating");
}

std::optional<Solution> gamma_o_exact(const Digraph& d, const SolverOptions& options) {
  enforce_guard(d, options);
  if (d.order() == 0) return std::nullopt;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) == 0) return std::nullopt;
  }
  const MaskGraph g(d);
  const auto found = min_cover(
      g.n, g.out, [](Mask, Vertex, std::size_t) { return true; }, [](Mask) { return true; });
  if (!found) return std::nullopt;
  return checked(Solution{static_cast<std::size_t>(std::popcount(*found)), detail::from_mask(*found)},
                 d, is_open_dominating, "open dominating");
}

namespace {

// Closed neighborhoods of the undirected graph, built from adjacency lists.
std::vector<Mask> closed_neighborhoods(const Digraph& g) {
  std::vector<Mask> closed(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    closed[v] = bit(v);
    for (Vertex w : g.neighbors(v)) closed[v] |= bit(w);
  }
  return closed;
}

bool undirected_dominates(const std::vector<Mask>& closed, const VertexSet& s) {
  for (Vertex v = 0; v < closed.size(); ++v) {
    bool hit = false;
    for (Vertex u : s) hit = hit || (closed[v] & bit(u)) != 0;
    if (!hit) return false;
  }
  return true;
}

bool undirected_packs(const std::vector<Mask>& closed, const VertexSet& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (closed[m[i]] & closed[m[j]]) return false;
    }
  }
  return true;
}

}  // namespace

Solution undirected_gamma_exact(const Digraph& g, const SolverOptions& options) {
  require_symmetric(g);
  enforce_guard(g, options);
  const auto closed = closed_neighborhoods(g);
  const auto found = min_cover(
      g.order(), closed, [](Mask, Vertex, std::size_t) { return true; }, [](Mask) { return true; });
  if (!found) throw std::logic_error("no dominating set found");
  Solution s{static_cast<std::size_t>(std::popcount(*found)), detail::from_mask(*found)};
  if (!undirected_dominates(closed, s.witness)) throw std::logic_error("invalid undirected dominating set");
  return s;
}

Solution undirected_rho_exact(const Digraph& g, const SolverOptions& options) {
  require_symmetric(g);
  enforce_guard(g, options);
  const auto closed = closed_neighborhoods(g);
  auto s = max_conflict_free(g.order(), [&](Vertex v, Mask others) {
    bool disjoint = true;
    for_each_bit(others, [&](Vertex u) { disjoint = disjoint && (closed[u] & closed[v]) == 0; });
    return disjoint;
  });
  if (!undirected_packs(closed, s.witness)) throw std::logic_error("invalid undirected packing");
  return s;
}

std::optional<std::size_t> slater_out(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<std::size_t> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = d.out_degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  std::size_t sum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    sum += degrees[k - 1];
    if (k / 2 + sum >= n) return k;
  }
  return std::nullopt;
}

Ratio rho_lower_bound(const Digraph& d) {
  const DegreeStats st = degree_stats(d);
  const auto n = static_cast<std::int64_t>(d.order());
  const auto dmax = static_cast<std::int64_t>(st.max_underlying);
  const auto dmin = static_cast<std::int64_t>(st.min_underlying);
  const auto out = static_cast<std::int64_t>(st.max_out);
  const auto in = static_cast<std::int64_t>(st.max_in);
  const auto star = static_cast<std::int64_t>(st.delta_star);
  return Ratio(n + dmax - dmin + (out - 1) * (in - star), 1 + dmax + in * (out - 1));
}

VertexSet greedy_packing(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<char> alive(n, 1);
  std::size_t left = n;
  std::vector<Vertex> chosen;
  while (left > 0) {
    std::optional<Vertex> pick;
    std::size_t pick_deg = 0;
    std::size_t pick_in = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (Vertex w : d.neighbors(v)) deg += alive[w];
      std::size_t in = 0;
      for (Vertex w : d.in(v)) in += alive[w];
      if (!pick || deg < pick_deg || (deg == pick_deg && in < pick_in)) {
        pick = v;
        pick_deg = deg;
        pick_in = in;
      }
    }
    const Vertex u = *pick;
    chosen.push_back(u);
    // Neighborhoods are those of d, not of the remaining subdigraph: a vertex
    // discarded earlier can still be a common in-neighbor of two later picks.
    auto drop = [&](Vertex w) {
      if (alive[w]) {
        alive[w] = 0;
        --left;
      }
    };
    drop(u);
    for (Vertex w : d.neighbors(u)) drop(w);
    for (Vertex w : d.in(u)) {
      for (Vertex x : d.out(w)) drop(x);
    }
  }
  return VertexSet(std::move(chosen));
}

ParameterReport compute_parameters(const Digraph& d, const SolverOptions& options) {
  ParameterReport r;
  r.rho = rho_exact(d, options);
  r.gamma = gamma_exact(d, options);
  r.gamma_t = gamma_t_exact(d, options);
  r.gamma_o = gamma_o_exact(d, options);
  r.slater_out = slater_out(d);
  r.stats = degree_stats(d);
  r.rho_lower_bound = rho_lower_bound(d);
  return r;
}

}  // namespace dompack
