#ifndef GLAB_ISOMORPHISM_HPP
#define GLAB_ISOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "glab/graph.hpp"

namespace glab {

inline constexpr std::size_t kMaxIsomorphismOrder = 16;

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) noexcept {
  // splitmix64 finaliser over h ^ x
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Isomorphism-invariant vertex labels: (degree, triangle count) refined by a
/// few rounds of neighbourhood-multiset hashing.
inline std::vector<std::uint64_t> vertex_invariants(const Graph& g, int rounds = 3) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = detail::mix(popcount(g.adjacency(v)), triangles_at(g, v));
  std::vector<std::uint64_t> next(n), nbr;
  for (int r = 0; r < rounds; ++r) {
    for (Vertex v = 0; v < n; ++v) {
      nbr.clear();
      for (Vertex u : vertices_of(g.adjacency(v))) nbr.push_back(label[u]);
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = label[v];
      for (auto x : nbr) h = detail::mix(h, x);
      next[v] = h;
    }
    label.swap(next);
  }
  return label;
}

/// Order-independent digest of a graph; isomorphic graphs get equal digests.
inline std::uint64_t invariant_digest(const Graph& g) {
  auto labels = vertex_invariants(g);
  std::sort(labels.begin(), labels.end());
  std::uint64_t h = detail::mix(g.order(), g.edge_count());
  for (auto x : labels) h = detail::mix(h, x);
  return h;
}

/// Backtracking search for an isomorphism G -> H, pruned by vertex invariants.
/// Returns the vertex map (G vertex -> H vertex) when one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw unsupported_error("isomorphism test is limited to 16 vertices");
  }
  const std::size_t n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;

  auto lg = vertex_invariants(g);
  auto lh = vertex_invariants(h);
  {
    auto sg = lg, sh = lh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }

  // Map G's vertices rarest-label first, preferring vertices adjacent to
  // those already placed.
  std::vector<Vertex> order;
  Mask placed = 0;
  auto class_size = [&](Vertex v) { return std::count(lg.begin(), lg.end(), lg[v]); };
  while (order.size() < n) {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      if (best == kNoVertex) {
        best = v;
        continue;
      }
      bool vc = (g.adjacency(v) & placed) != 0, bc = (g.adjacency(best) & placed) != 0;
      if (vc != bc) {
        if (vc) best = v;
        continue;
      }
      if (class_size(v) < class_size(best)) best = v;
    }
    order.push_back(best);
    placed |= bit(best);
  }

  std::vector<Vertex> map(n, kNoVertex);
  Mask used = 0;
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if ((used & bit(w)) || lh[w] != lg[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        Vertex u = order[k];
        ok = ((g.adjacency(v) >> u) & 1) == ((h.adjacency(w) >> map[u]) & 1);
      }
      if (!ok) continue;
      map[v] = w;
      used |= bit(w);
      if (self(self, depth + 1)) return true;
      used &= ~bit(w);
      map[v] = kNoVertex;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

/// Relabels G by `perm` (old vertex v becomes perm[v]).
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw usage_error("permutation size does not match graph order");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace glab

#endif  // GLAB_ISOMORPHISM_HPP
