#include "dompack/chordal.hpp"

#include <algorithm>

#include "bitmask.hpp"
#include "dompack/errors.hpp"

namespace dompack {

using detail::bit;
using detail::Mask;

namespace {

void require_symmetric(const Digraph& g) {
  if (!g.is_symmetric()) throw ContractError("chordality needs a symmetric digraph");
}

std::vector<Mask> adjacency(const Digraph& g) {
  if (g.order() > detail::kMaskBits) throw GuardExceeded(g.order(), detail::kMaskBits);
  return detail::MaskGraph(g).und;
}

bool is_clique(const std::vector<Mask>& adj, Mask set) {
  bool ok = true;
  detail::for_each_bit(set, [&](Vertex v) {
    if ((set & ~bit(v) & ~adj[v]) != 0) ok = false;
  });
  return ok;
}

bool simplicial_in(const std::vector<Mask>& adj, Vertex v, Mask alive) {
  return is_clique(adj, adj[v] & alive);
}

}  // namespace

std::optional<EliminationOrdering> simplicial_elimination(const Digraph& g) {
  require_symmetric(g);
  const auto adj = adjacency(g);
  Mask alive = detail::full_mask(g.order());
  EliminationOrdering e;
  while (alive) {
    std::optional<Vertex> pick;
    detail::for_each_bit(alive, [&](Vertex v) {
      if (!pick && simplicial_in(adj, v, alive)) pick = v;
    });
    if (!pick) return std::nullopt;
    e.order.push_back(*pick);
    alive &= ~bit(*pick);
  }
  return e;
}

bool is_simplicial_elimination(const Digraph& g, const EliminationOrdering& e) {
  require_symmetric(g);
  if (e.order.size() != g.order()) return false;
  const auto adj = adjacency(g);
  Mask alive = detail::full_mask(g.order());
  for (Vertex v : e.order) {
    if (v >= g.order() || (alive & bit(v)) == 0) return false;
    if (!simplicial_in(adj, v, alive)) return false;
    alive &= ~bit(v);
  }
  return true;
}

namespace {

class SunSearch {
 public:
  SunSearch(const std::vector<Mask>& adj, std::size_t n, std::size_t k)
      : adj_(adj), n_(n), k_(k) {}

  std::optional<KSun> run() {
    for (Vertex first = 0; first < n_; ++first) {
      core_ = {first};
      if (extend_core()) return found_;
    }
    return std::nullopt;
  }

 private:
  // Extends the core path; v_1 is its smallest vertex, which removes
  // rotations from the search.
  bool extend_core() {
    if (core_.size() == k_) {
      if ((adj_[core_.back()] & bit(core_.front())) == 0) return false;
      core_mask_ = 0;
      for (Vertex c : core_) core_mask_ |= bit(c);
      outer_.clear();
      return choose_outer(0, 0);
    }
    for (Vertex v = core_.front() + 1; v < n_; ++v) {
      if (std::find(core_.begin(), core_.end(), v) != core_.end()) continue;
      if ((adj_[core_.back()] & bit(v)) == 0) continue;
      core_.push_back(v);
      if (extend_core()) return true;
      core_.pop_back();
    }
    return false;
  }

  bool choose_outer(std::size_t i, Mask used) {
    if (i == k_) {
      found_ = KSun{core_, outer_};
      return true;
    }
    const Mask want = bit(core_[i]) | bit(core_[(i + 1) % k_]);
    for (Vertex u = 0; u < n_; ++u) {
      const Mask ub = bit(u);
      if ((core_mask_ | used) & ub) continue;
      if ((adj_[u] & core_mask_) != want) continue;
      if (adj_[u] & used) continue;
      outer_.push_back(u);
      if (choose_outer(i + 1, used | ub)) return true;
      outer_.pop_back();
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Vertex> core_;
  std::vector<Vertex> outer_;
  Mask core_mask_ = 0;
  KSun found_;
};

}  // namespace

std::optional<KSun> find_k_sun(const Digraph& g, std::size_t k_max) {
  require_symmetric(g);
  if (g.order() > kSunSearchGuard) throw GuardExceeded(g.order(), kSunSearchGuard);
  const auto adj = adjacency(g);
  for (std::size_t k = 3; k <= k_max && 2 * k <= g.order(); ++k) {
    if (auto sun = SunSearch(adj, g.order(), k).run()) return sun;
  }
  return std::nullopt;
}

bool is_k_sun(const Digraph& g, const KSun& sun) {
  const std::size_t k = sun.core.size();
  if (k < 3 || sun.outer.size() != k) return false;
  std::vector<Vertex> all(sun.core);
  all.insert(all.end(), sun.outer.begin(), sun.outer.end());
  for (Vertex v : all) {
    if (v >= g.order()) return false;
  }
  std::vector<Vertex> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_arc(sun.core[i], sun.core[(i + 1) % k])) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const bool expected = j == i || j == (i + 1) % k;
      if (g.has_arc(sun.outer[i], sun.core[j]) != expected) return false;
      if (i != j && g.has_arc(sun.outer[i], sun.outer[j])) return false;
    }
  }
  return true;
}

ChordalVerdict strongly_chordal_desk(const Digraph& g, std::size_t k_max) {
  ChordalVerdict v;
  v.k_max = k_max;
  v.ordering = simplicial_elimination(g);
  v.chordal = v.ordering.has_value();
  v.sun = find_k_sun(g, k_max);
  v.strongly_chordal = v.chordal && !v.sun;
  return v;
}

}  // namespace dompack
