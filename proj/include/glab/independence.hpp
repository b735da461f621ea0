#ifndef GLAB_INDEPENDENCE_HPP
#define GLAB_INDEPENDENCE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "glab/graph.hpp"

namespace glab {

namespace detail {

// Greedy clique cover of `cand`: an upper bound on the independence number of G[cand].
inline std::size_t clique_cover_bound(const Graph& g, Mask cand) noexcept {
  std::size_t cliques = 0;
  while (cand) {
    Vertex v = lowest_vertex(cand);
    Mask clique_cand = g.adjacency(v) & cand;
    cand &= ~bit(v);
    while (clique_cand) {
      Vertex u = lowest_vertex(clique_cand);
      cand &= ~bit(u);
      clique_cand &= g.adjacency(u);
    }
    ++cliques;
  }
  return cliques;
}

inline void max_independent(const Graph& g, Mask cand, std::size_t size, std::size_t& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + clique_cover_bound(g, cand) <= best) return;
  // Branch on a vertex of minimum degree inside cand; degree-0 vertices are forced.
  Vertex pick = lowest_vertex(cand);
  std::size_t pick_deg = popcount(g.adjacency(pick) & cand);
  for (Vertex v : vertices_of(cand)) {
    std::size_t d = popcount(g.adjacency(v) & cand);
    if (d < pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  max_independent(g, cand & ~bit(pick) & ~g.adjacency(pick), size + 1, best);
  if (pick_deg == 0) return;
  // Excluding pick only helps if some neighbour ends up in the set.
  max_independent(g, cand & ~bit(pick), size, best);
}

}  // namespace detail

/// α(G) by branch and bound with a greedy clique-cover bound.
inline std::size_t independence_number(const Graph& g) {
  std::size_t best = 0;
  detail::max_independent(g, g.vertex_mask(), 0, best);
  return best;
}

/// Visits every independent set exactly once: ∅ first, then by ascending
/// size, ties broken by ascending mask value. The visitor returns false to stop.
inline void for_each_independent_set(const Graph& g, const std::function<bool(Mask)>& visit) {
  std::vector<Mask> level{0};
  while (!level.empty()) {
    for (Mask s : level)
      if (!visit(s)) return;
    std::vector<Mask> next;
    for (Mask s : level) {
      Vertex start = s == 0 ? 0 : (std::bit_width(s));
      Mask blocked = s;
      for (Vertex v : vertices_of(s)) blocked |= g.adjacency(v);
      for (Vertex v = start; v < g.order(); ++v)
        if (!(blocked & bit(v))) next.push_back(s | bit(v));
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
}

inline std::vector<Mask> independent_set_masks(const Graph& g) {
  std::vector<Mask> out;
  for_each_independent_set(g, [&](Mask s) {
    out.push_back(s);
    return true;
  });
  return out;
}

inline std::vector<VertexSet> enumerate_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (Mask s : independent_set_masks(g)) out.push_back(VertexSet::from_mask(s, g.order()));
  return out;
}

/// Maximal independent sets (Bron–Kerbosch with pivoting on the complement),
/// sorted by mask value.
inline std::vector<Mask> maximal_independent_sets(const Graph& g) {
  std::vector<Mask> out;
  const Mask all = g.vertex_mask();
  // In the complement graph, non-neighbours of v are its "neighbours".
  auto co_adj = [&](Vertex v) { return all & ~g.adjacency(v) & ~bit(v); };
  std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    Mask px = p | x;
    Vertex pivot = lowest_vertex(px);
    std::size_t best = 0;
    for (Vertex u : vertices_of(px)) {
      std::size_t c = popcount(p & co_adj(u));
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    for (Vertex v : vertices_of(p & ~co_adj(pivot))) {
      expand(r | bit(v), p & co_adj(v), x & co_adj(v));
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  expand(0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_well_covered(const Graph& g) {
  auto facets = maximal_independent_sets(g);
  const std::size_t size = popcount(facets.front());
  return std::all_of(facets.begin(), facets.end(), [&](Mask f) { return popcount(f) == size; });
}

/// v is extendable when G is well-covered, G\v is well-covered and α(G\v) = α(G).
inline bool is_extendable(const Graph& g, Vertex v) {
  if (v >= g.order()) throw usage_error("vertex " + std::to_string(v) + " out of range");
  if (!is_well_covered(g)) return false;
  Graph rest = delete_vertex(g, v);
  return is_well_covered(rest) && independence_number(rest) == independence_number(g);
}

inline bool is_w2(const Graph& g) {
  if (g.order() < 2) throw domain_error("W2 membership needs at least two vertices");
  if (!is_well_covered(g)) return false;
  const std::size_t alpha = independence_number(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    Graph rest = delete_vertex(g, v);
    if (!is_well_covered(rest) || independence_number(rest) != alpha) return false;
  }
  return true;
}

/// δ*(v): number of non-isolated vertices of G[N(v)].
inline std::size_t delta_star_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw usage_error("vertex " + std::to_string(v) + " out of range");
  const Mask nv = g.adjacency(v);
  std::size_t count = 0;
  for (Vertex u : vertices_of(nv))
    if (g.adjacency(u) & nv) ++count;
  return count;
}

inline std::size_t delta_star(const Graph& g) {
  if (g.order() == 0) throw domain_error("delta_star of the null graph is undefined");
  std::size_t best = delta_star_vertex(g, 0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, delta_star_vertex(g, v));
  return best;
}

}  // namespace glab

#endif  // GLAB_INDEPENDENCE_HPP
