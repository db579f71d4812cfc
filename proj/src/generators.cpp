#include "dompack/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string_view>

#include "bitmask.hpp"
#include "dompack/errors.hpp"

namespace dompack {

namespace {

using Rng = std::mt19937_64;

// Unbiased draw in [0, bound); independent of the standard library's
// distribution implementations so that instances match across toolchains.
std::uint64_t uniform(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Vertex> shuffled_labels(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform(rng, i)]);
  }
  return perm;
}

// parent[i] < i for i > 0; the first `chain` vertices form a path.
std::vector<Vertex> parent_array(std::size_t n, Rng& rng, std::size_t chain = 1) {
  std::vector<Vertex> parent(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    parent[i] = i < chain ? static_cast<Vertex>(i - 1) : static_cast<Vertex>(uniform(rng, i));
  }
  return parent;
}

void require(bool ok, const char* what) {
  if (!ok) throw ContractError(what);
}

CertifiedValue cert(std::size_t value, std::string anchor) {
  return {value, std::move(anchor)};
}

std::size_t max_out_degree(const Digraph& d) {
  std::size_t m = 0;
  for (Vertex v = 0; v < d.order(); ++v) m = std::max(m, d.out_degree(v));
  return m;
}

// Adds up to a seeded number of arcs leaving vertices in [first_free, n),
// keeping their out-degree at most `cap`.
void add_extra_arcs(std::size_t n, Vertex first_free, std::size_t cap, std::vector<Arc>& arcs,
                    Rng& rng) {
  if (first_free >= n) return;
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  std::vector<std::size_t> out(n, 0);
  for (const Arc& a : arcs) {
    present[a.tail][a.head] = 1;
    ++out[a.tail];
  }
  const std::size_t free_count = n - first_free;
  const std::size_t target = 1 + uniform(rng, 2 * n);
  const std::size_t budget = 20 * n;
  std::size_t added = 0;
  for (std::size_t attempt = 0; attempt < budget && added < target; ++attempt) {
    const auto x = static_cast<Vertex>(first_free + uniform(rng, free_count));
    const auto y = static_cast<Vertex>(uniform(rng, n));
    if (x == y || present[x][y] || out[x] >= cap) continue;
    present[x][y] = 1;
    ++out[x];
    arcs.push_back({x, y});
    ++added;
  }
}

constexpr std::array<std::pair<Family, std::string_view>, 12> kFamilyNames{{
    {Family::kStar, "star"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kTournament, "tournament"},
    {Family::kRootedTree, "rooted_tree"},
    {Family::kDirectedTree, "directed_tree"},
    {Family::kContrafunctional, "contrafunctional"},
    {Family::kTheta, "theta"},
    {Family::kSigma, "sigma"},
    {Family::kSlaterTree, "slater_tree"},
    {Family::kPhiMember, "phi_member"},
    {Family::kRandom, "random"},
}};

}  // namespace

std::string to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return std::string(name);
  }
  return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
  for (const auto& [family, n] : kFamilyNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

GeneratedInstance directed_star(std::size_t n) {
  require(n >= 1, "directed star needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex v = 1; v < n; ++v) arcs.push_back({0, v});
  GeneratedInstance g{Digraph(n, std::move(arcs)), Family::kStar, {}, std::nullopt};
  g.expected.rho = cert(1, "every pair shares the root's closed out-neighborhood");
  g.expected.gamma = cert(1, "the root dominates every leaf");
  if (n >= 2) {
    g.expected.gamma_t = cert(2, "star: total domination number 2");
    g.expected.slater_out = cert(2, "star: out-Slater number 2");
    g.expected.witness = VertexSet{0, 1};
  }
  return g;
}

GeneratedInstance directed_path(std::size_t n) {
  require(n >= 1, "directed path needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex v = 1; v < n; ++v) arcs.push_back({v - 1, v});
  GeneratedInstance g{Digraph(n, std::move(arcs)), Family::kPath, {}, std::nullopt};
  // Closed out-neighborhoods are consecutive pairs.
  g.expected.rho = cert((n + 1) / 2, "no two consecutive vertices in a packing");
  g.expected.gamma = cert((n + 1) / 2, "each vertex dominates itself and its successor");
  return g;
}

GeneratedInstance directed_cycle(std::size_t n) {
  require(n >= 3, "directed cycle needs n >= 3");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, static_cast<Vertex>((v + 1) % n)});
  GeneratedInstance g{Digraph(n, std::move(arcs)), Family::kCycle, {}, std::nullopt};
  g.expected.rho = cert(n / 2, "cycle: floor(n/2)");
  g.expected.gamma = cert((n + 1) / 2, "cycle: ceil(n/2)");
  g.expected.gamma_o = cert(n, "every vertex needs its unique in-neighbor");
  return g;
}

GeneratedInstance random_rooted_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "rooted tree needs n >= 1");
  Rng rng(seed);
  const auto parent = parent_array(n, rng);
  const auto label = shuffled_labels(n, rng);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < n; ++i) arcs.push_back({label[parent[i]], label[i]});
  return {Digraph(n, std::move(arcs)), Family::kRootedTree, {}, seed};
}

GeneratedInstance random_directed_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "directed tree needs n >= 1");
  Rng rng(seed);
  const auto parent = parent_array(n, rng);
  const auto label = shuffled_labels(n, rng);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex a = label[parent[i]];
    const Vertex b = label[i];
    if (coin(rng)) {
      arcs.push_back({a, b});
    } else {
      arcs.push_back({b, a});
    }
  }
  return {Digraph(n, std::move(arcs)), Family::kDirectedTree, {}, seed};
}

GeneratedInstance random_tournament(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "tournament needs n >= 1");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        arcs.push_back({u, v});
      } else {
        arcs.push_back({v, u});
      }
    }
  }
  GeneratedInstance g{Digraph(n, std::move(arcs)), Family::kTournament, {}, seed};
  g.expected.rho = cert(1, "any two vertices of a tournament are joined by an arc");
  return g;
}

GeneratedInstance random_contrafunctional(std::size_t n, std::uint64_t seed,
                                          std::size_t min_cycle) {
  require(min_cycle == 2 || min_cycle == 3, "min_cycle must be 2 or 3");
  require(n >= min_cycle, "contrafunctional digraph needs n >= min_cycle");
  Rng rng(seed);
  const auto parent = parent_array(n, rng, min_cycle);
  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> deep;
  for (std::size_t i = 1; i < n; ++i) {
    depth[i] = depth[parent[i]] + 1;
    if (depth[i] + 1 >= min_cycle) deep.push_back(static_cast<Vertex>(i));
  }
  const Vertex closer = deep[uniform(rng, deep.size())];
  const auto label = shuffled_labels(n, rng);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < n; ++i) arcs.push_back({label[parent[i]], label[i]});
  arcs.push_back({label[closer], label[0]});
  return {Digraph(n, std::move(arcs)), Family::kContrafunctional, {}, seed};
}

GeneratedInstance random_height_one_contrafunctional(std::size_t n, std::uint64_t seed) {
  require(n >= 2, "height-one contrafunctional digraph needs n >= 2");
  Rng rng(seed);
  const std::size_t m = 2 + uniform(rng, n - 1);
  const auto label = shuffled_labels(n, rng);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < m; ++i) arcs.push_back({label[i], label[(i + 1) % m]});
  for (std::size_t i = m; i < n; ++i) arcs.push_back({label[uniform(rng, m)], label[i]});
  return {Digraph(n, std::move(arcs)), Family::kContrafunctional, {}, seed};
}

GeneratedInstance random_phi_member(std::size_t m, std::uint64_t seed) {
  require(m >= 1, "phi member needs m >= 1");
  const GeneratedInstance skeleton = random_rooted_tree(m, seed);
  std::vector<Arc> arcs(skeleton.digraph.arcs().begin(), skeleton.digraph.arcs().end());
  for (Vertex v = 0; v < m; ++v) arcs.push_back({v, static_cast<Vertex>(m + v)});
  GeneratedInstance g{Digraph(2 * m, std::move(arcs)), Family::kPhiMember, {}, seed};
  g.expected.rho = cert(m, "corona: one vertex per pendant pair");
  g.expected.gamma = cert(m, "corona: gamma = n/2");
  return g;
}

GeneratedInstance random_digraph(std::size_t n, double density, std::uint64_t seed) {
  require(n >= 1, "digraph needs n >= 1");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && unit(rng) < density) arcs.push_back({u, v});
    }
  }
  return {Digraph(n, std::move(arcs)), Family::kRandom, {}, seed};
}

GeneratedInstance theta_instance(std::size_t r, std::size_t k, bool extra_arcs,
                                 std::uint64_t seed) {
  require(r >= 1, "theta instance needs r >= 1");
  const std::size_t n = r * (2 * k + 3);
  std::vector<Arc> arcs;
  auto next = static_cast<Vertex>(2 * r);
  std::vector<Vertex> core;
  for (Vertex i = 0; i < r; ++i) {
    const Vertex u = 2 * i;
    const Vertex v = 2 * i + 1;
    core.push_back(u);
    core.push_back(v);
    arcs.push_back({u, v});
    for (std::size_t j = 0; j < k; ++j) arcs.push_back({u, next++});
    for (std::size_t j = 0; j < k + 1; ++j) arcs.push_back({v, next++});
  }
  std::optional<std::uint64_t> used_seed;
  if (extra_arcs) {
    Rng rng(seed);
    add_extra_arcs(n, static_cast<Vertex>(2 * r), k + 1, arcs, rng);
    used_seed = seed;
  }
  GeneratedInstance g{Digraph(n, std::move(arcs)), Family::kTheta, {}, used_seed};
  g.expected.gamma_t = cert(2 * r, "theta family: gamma_t = 2n/(2*maxout+1)");
  g.expected.witness = VertexSet(std::move(core));
  return g;
}

GeneratedInstance sigma_instance(const Digraph& base, std::size_t k, bool extra_arcs,
                                 std::uint64_t seed) {
  const Classification c = classify(base);
  require(c.connected && c.contrafunctional, "sigma base must be connected contrafunctional");
  require(k >= max_out_degree(base), "sigma instance needs k >= max out-degree of base");
  const std::size_t m = base.order();
  const std::size_t n = k * m;
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  auto next = static_cast<Vertex>(m);
  for (Vertex v = 0; v < m; ++v) {
    for (std::size_t j = base.out_degree(v); j < k; ++j) arcs.push_back({v, next++});
  }
  std::optional<std::uint64_t> used_seed;
  if (extra_arcs) {
    Rng rng(seed);
    add_extra_arcs(n, static_cast<Vertex>(m), k, arcs, rng);
    used_seed = seed;
  }
  GeneratedInstance g{Digraph(n, std::move(arcs)), Family::kSigma, {}, used_seed};
  g.expected.gamma_o = cert(m, "sigma family: gamma_o = n/maxout");
  g.expected.witness = VertexSet::all(m);
  return g;
}

GeneratedInstance slater_realization_tree(std::size_t a, std::size_t b) {
  require(a >= 2, "slater tree needs a >= 2");
  require(b + 1 <= a / 2, "slater tree needs b <= floor(a/2) - 1");
  std::vector<Arc> arcs;
  std::vector<Vertex> witness;
  for (Vertex i = 0; i < a; ++i) {
    witness.push_back(i);
    if (i + 1 < a) arcs.push_back({i, i + 1});
  }
  auto next = static_cast<Vertex>(a);
  for (Vertex i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < 2 * a; ++j) {
      const Vertex leaf = next++;
      if (j == 0 && i < b) {
        const Vertex w = static_cast<Vertex>(2 * a * a + a + i);
        arcs.push_back({i, w});
        arcs.push_back({w, leaf});
        witness.push_back(w);
      } else {
        arcs.push_back({i, leaf});
      }
    }
  }
  const std::size_t n = 2 * a * a + a + b;
  GeneratedInstance g{Digraph(n, std::move(arcs)), Family::kSlaterTree, {}, std::nullopt};
  g.expected.gamma_t = cert(a + b, "realization tree: gamma_t = a + b");
  g.expected.slater_out = cert(a, "realization tree: out-Slater number a");
  g.expected.witness = VertexSet(std::move(witness));
  return g;
}

namespace {

bool every_outside_vertex_has_one_in_neighbor(const Digraph& d, const VertexSet& s) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (s.contains(v)) continue;
    std::size_t from_s = 0;
    for (Vertex u : d.in(v)) from_s += s.contains(u) ? 1 : 0;
    if (from_s != 1) return false;
  }
  return true;
}

bool members_have_max_out_degree(const Digraph& d, const VertexSet& s) {
  const std::size_t top = max_out_degree(d);
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return d.out_degree(v) == top; });
}

template <class Structure>
std::optional<VertexSet> find_core(const Digraph& d, std::size_t size, Structure structure) {
  if (d.order() > detail::kMaskBits) throw GuardExceeded(d.order(), detail::kMaskBits);
  // Both structures need every member at maximum out-degree.
  const std::size_t top = max_out_degree(d);
  const auto found = detail::first_lex_subset(
      d.order(), size,
      [&](detail::Mask, Vertex next, std::size_t) {
        return next == 0 || d.out_degree(next - 1) == top;
      },
      [&](detail::Mask m) { return structure(d, detail::from_mask(m)); });
  if (!found) return std::nullopt;
  return detail::from_mask(*found);
}

}  // namespace

bool theta_structure(const Digraph& d, const VertexSet& s) {
  if (s.empty() || s.bound() > d.order()) return false;
  const InducedSubgraph inner = induced_subgraph(d, s);
  if (2 * inner.graph.arc_count() != s.size()) return false;
  for (Vertex v = 0; v < inner.graph.order(); ++v) {
    if (inner.graph.degree(v) != 1 || inner.graph.in_degree(v) + inner.graph.out_degree(v) != 1) {
      return false;
    }
  }
  return every_outside_vertex_has_one_in_neighbor(d, s) && members_have_max_out_degree(d, s);
}

bool sigma_structure(const Digraph& d, const VertexSet& s) {
  if (s.empty() || s.bound() > d.order()) return false;
  const InducedSubgraph inner = induced_subgraph(d, s);
  for (Vertex v = 0; v < inner.graph.order(); ++v) {
    if (inner.graph.in_degree(v) != 1) return false;
  }
  return every_outside_vertex_has_one_in_neighbor(d, s) && members_have_max_out_degree(d, s);
}

std::optional<VertexSet> find_theta_core(const Digraph& d) {
  const std::size_t denom = 2 * max_out_degree(d) + 1;
  if ((2 * d.order()) % denom != 0) return std::nullopt;
  return find_core(d, 2 * d.order() / denom, theta_structure);
}

std::optional<VertexSet> find_sigma_core(const Digraph& d) {
  const std::size_t top = max_out_degree(d);
  if (top == 0 || d.order() % top != 0) return std::nullopt;
  return find_core(d, d.order() / top, sigma_structure);
}

}  // namespace dompack
