#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "dompack/digraph.hpp"

namespace dompack::detail {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaskBits = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

inline VertexSet from_mask(Mask m) {
  std::vector<Vertex> members;
  while (m) {
    members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return VertexSet(std::move(members));
}

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// Bitmask adjacency of a digraph with at most 64 vertices.
struct MaskGraph {
  std::size_t n = 0;
  Mask full = 0;
  std::vector<Mask> out;  // open out-neighborhoods
  std::vector<Mask> in;   // open in-neighborhoods
  std::vector<Mask> und;  // underlying open neighborhoods

  explicit MaskGraph(const Digraph& d)
      : n(d.order()), full(full_mask(d.order())), out(n, 0), in(n, 0), und(n, 0) {
    for (const Arc& a : d.arcs()) {
      out[a.tail] |= bit(a.head);
      in[a.head] |= bit(a.tail);
      und[a.tail] |= bit(a.head);
      und[a.head] |= bit(a.tail);
    }
  }
};

// Depth-first walk over the k-subsets of {0..n-1} in lexicographic order.
// `viable(mask, next, remaining)` may reject a prefix (every extension of
// it); `accept(mask)` judges complete subsets. Returns the first accepted
// subset, which is the lexicographically least one.
template <class Viable, class Accept>
class LexSearch {
 public:
  LexSearch(std::size_t n, std::size_t k, Viable viable, Accept accept)
      : n_(n), k_(k), viable_(std::move(viable)), accept_(std::move(accept)) {}

  std::optional<Mask> run() {
    if (k_ > n_) return std::nullopt;
    if (!viable_(Mask{0}, Vertex{0}, k_)) return std::nullopt;
    return descend(0, 0, k_);
  }

 private:
  std::optional<Mask> descend(Mask mask, Vertex start, std::size_t remaining) {
    if (remaining == 0) {
      if (accept_(mask)) return mask;
      return std::nullopt;
    }
    const auto last = static_cast<Vertex>(n_ - remaining);
    for (Vertex v = start; v <= last; ++v) {
      const Mask next = mask | bit(v);
      if (!viable_(next, v + 1, remaining - 1)) continue;
      if (auto found = descend(next, v + 1, remaining - 1)) return found;
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::size_t k_;
  Viable viable_;
  Accept accept_;
};

template <class Viable, class Accept>
std::optional<Mask> first_lex_subset(std::size_t n, std::size_t k, Viable viable,
                                     Accept accept) {
  return LexSearch<Viable, Accept>(n, k, std::move(viable), std::move(accept)).run();
}

}  // namespace dompack::detail
