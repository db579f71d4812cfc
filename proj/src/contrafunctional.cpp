#include "dompack/contrafunctional.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "dompack/errors.hpp"
#include "dompack/transforms.hpp"

namespace dompack {

namespace {

void require_connected_contrafunctional(const Digraph& d) {
  const Classification c = classify(d);
  if (!c.connected || !c.contrafunctional) {
    throw ContractError("digraph is not connected contrafunctional");
  }
}

std::vector<Vertex> cycle_of(const Digraph& d) {
  std::vector<char> seen(d.order(), 0);
  Vertex v = 0;
  while (!seen[v]) {
    seen[v] = 1;
    v = d.in(v).front();
  }
  std::vector<Vertex> backward{v};
  for (Vertex w = d.in(v).front(); w != v; w = d.in(w).front()) backward.push_back(w);
  std::reverse(backward.begin(), backward.end());
  const auto smallest = std::min_element(backward.begin(), backward.end());
  std::rotate(backward.begin(), smallest, backward.end());
  return backward;
}

// Distance from the cycle along arcs, for every vertex.
std::vector<std::size_t> cycle_distances(const Digraph& d, const std::vector<Vertex>& cycle) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(d.order(), kUnset);
  std::vector<Vertex> frontier(cycle.begin(), cycle.end());
  for (Vertex c : cycle) dist[c] = 0;
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w : d.out(v)) {
        if (dist[w] == kUnset) {
          dist[w] = dist[v] + 1;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

std::vector<Vertex> unique_cycle(const Digraph& d) {
  require_connected_contrafunctional(d);
  return cycle_of(d);
}

std::size_t height(const Digraph& d) {
  const auto cycle = unique_cycle(d);
  const auto dist = cycle_distances(d, cycle);
  return *std::max_element(dist.begin(), dist.end());
}

RdsesResult rdses_contrafunctional(const Digraph& d) {
  const auto cycle = unique_cycle(d);
  const auto dist = cycle_distances(d, cycle);
  std::vector<char> alive(d.order(), 1);

  RdsesResult result;
  std::vector<Vertex> chosen;
  while (true) {
    std::optional<Vertex> deepest;
    for (Vertex v = 0; v < d.order(); ++v) {
      if (alive[v] && (!deepest || dist[v] > dist[*deepest])) deepest = v;
    }
    if (dist[*deepest] <= 1) break;
    // Nothing alive lies below a deepest vertex, so it is a leaf and its
    // support's remaining out-neighbors are leaves as well.
    const Vertex leaf = *deepest;
    const Vertex support = d.in(leaf).front();
    std::vector<Vertex> block{support};
    alive[support] = 0;
    for (Vertex w : d.out(support)) {
      if (alive[w]) {
        alive[w] = 0;
        block.push_back(w);
      }
    }
    VertexSet removed(std::move(block));
    result.partition.push_back(removed);
    result.stages.push_back({leaf, support, std::move(removed)});
    chosen.push_back(leaf);
  }

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (alive[v]) rest.push_back(v);
  }
  result.terminal = RdsesTerminal::kResidual;
  result.terminal_vertices = VertexSet(std::move(rest));
  result.partition.push_back(result.terminal_vertices);
  result.chosen = VertexSet(std::move(chosen));
  return result;
}

ContrafunctionalAnalysis analyze_contrafunctional(const Digraph& d) {
  ContrafunctionalAnalysis a;
  a.cycle = unique_cycle(d);
  a.height = height(d);
  a.rdses = rdses_contrafunctional(d);
  const std::size_t stages = a.rdses.stages.size();

  const InducedSubgraph remainder = induced_subgraph(d, a.rdses.terminal_vertices);
  const Digraph& r = remainder.graph;
  const std::size_t m = a.cycle.size();

  std::size_t terminal_rho = 0;
  std::size_t terminal_gamma = 0;
  if (r.order() == m) {
    a.omega = m % 2 == 1;
    terminal_rho = m / 2;
    terminal_gamma = (m + 1) / 2;
  } else {
    const std::vector<Vertex> cycle = cycle_of(r);
    std::vector<char> on_cycle(r.order(), 0);
    for (Vertex c : cycle) on_cycle[c] = 1;
    auto is_support = [&](Vertex c) {
      const auto succ = r.out(c);
      return std::any_of(succ.begin(), succ.end(), [&](Vertex w) { return !on_cycle[w]; });
    };

    std::optional<Arc> cut;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex u = cycle[i];
      const Vertex v = cycle[(i + 1) % cycle.size()];
      if (is_support(u) && !is_support(v)) {
        const Arc candidate{remainder.original[u], remainder.original[v]};
        if (!cut || candidate < Arc{remainder.original[cut->tail], remainder.original[cut->head]}) {
          cut = Arc{u, v};
        }
      }
    }
    if (!cut) {
      terminal_rho = terminal_gamma = cycle.size();
    } else {
      const RootedTree tree(remove_arc(r, cut->tail, cut->head));
      const RdsesResult tr = max_packing_rooted_tree(tree);
      // A leftover root would be the cut arc's head, which shares the
      // closed out-neighborhood of its former in-neighbor with a chosen leaf.
      const std::size_t value =
          tr.chosen.size() - (tr.terminal == RdsesTerminal::kIsolated ? 1 : 0);
      terminal_rho = terminal_gamma = value;
    }
  }
  a.rho = terminal_rho + stages;
  a.gamma = terminal_gamma + stages;
  return a;
}

}  // namespace dompack
