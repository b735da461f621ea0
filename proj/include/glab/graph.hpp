#ifndef GLAB_GRAPH_HPP
#define GLAB_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "glab/errors.hpp"
#include "glab/vertex_set.hpp"

namespace glab {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as symmetric adjacency
/// masks. Supports up to 64 vertices.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), adj_(n, 0) {
    if (n > kMaxVertices) throw unsupported_error("graphs above 64 vertices are not supported");
  }

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const noexcept { return n_; }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (Mask m : adj_) twice += popcount(m);
    return twice / 2;
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw usage_error("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return (adj_[u] & bit(v)) != 0;
  }

  VertexSet neighbors(Vertex v) const {
    check(v);
    return VertexSet::from_mask(adj_[v], n_);
  }

  // Unchecked fast path used by the algorithms.
  Mask adjacency(Vertex v) const noexcept { return adj_[v]; }

  std::size_t degree(Vertex v) const {
    check(v);
    return popcount(adj_[v]);
  }

  Mask vertex_mask() const noexcept { return full_mask(n_); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : vertices_of(adj_[u] & ~full_mask(u + 1))) out.emplace_back(u, v);
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= n_) throw usage_error("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::vector<Mask> adj_;
};

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// An induced subgraph together with the order-preserving relabeling.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new label -> old label
  std::vector<Vertex> from_original;  // old label -> new label, kNoVertex if dropped
};

namespace detail {

inline void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw usage_error("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                      std::to_string(g.order()));
  }
}

inline Mask neighborhood_of(const Graph& g, Mask s) noexcept {
  Mask out = 0;
  for (Vertex v : vertices_of(s)) out |= g.adjacency(v);
  return out & ~s;
}

}  // namespace detail

inline bool is_independent_mask(const Graph& g, Mask s) noexcept {
  for (Vertex v : vertices_of(s)) {
    if (g.adjacency(v) & s) return false;
  }
  return true;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  detail::require_universe(g, s);
  return is_independent_mask(g, s.mask());
}

/// N_G(S): the vertices outside S with a neighbour in S. S must be independent.
inline VertexSet neighbor_set(const Graph& g, const VertexSet& s) {
  detail::require_universe(g, s);
  if (!is_independent_mask(g, s.mask())) throw domain_error("neighbor_set: " + s.to_string() + " is not independent");
  return VertexSet::from_mask(detail::neighborhood_of(g, s.mask()), g.order());
}

inline Subgraph induced_mask(const Graph& g, Mask w) {
  Subgraph out;
  out.from_original.assign(g.order(), kNoVertex);
  for (Vertex v : vertices_of(w)) {
    out.from_original[v] = out.to_original.size();
    out.to_original.push_back(v);
  }
  out.graph = Graph(out.to_original.size());
  for (Vertex i = 0; i < out.to_original.size(); ++i) {
    for (Vertex u : vertices_of(g.adjacency(out.to_original[i]) & w)) {
      Vertex j = out.from_original[u];
      if (j > i) out.graph.add_edge(i, j);
    }
  }
  return out;
}

inline Subgraph induced(const Graph& g, const VertexSet& w) {
  detail::require_universe(g, w);
  return induced_mask(g, w.mask());
}

/// G_S = G \ (S ∪ N_G(S)) for an independent set S.
inline Subgraph localize(const Graph& g, const VertexSet& s) {
  detail::require_universe(g, s);
  if (!is_independent_mask(g, s.mask())) throw domain_error("localize: " + s.to_string() + " is not independent");
  Mask removed = s.mask() | detail::neighborhood_of(g, s.mask());
  return induced_mask(g, g.vertex_mask() & ~removed);
}

// Unchecked variant for hot loops; s must already be independent.
inline Graph localize_mask(const Graph& g, Mask s) {
  Mask removed = s | detail::neighborhood_of(g, s);
  return induced_mask(g, g.vertex_mask() & ~removed).graph;
}

inline Graph delete_vertices(const Graph& g, Mask s) { return induced_mask(g, g.vertex_mask() & ~s).graph; }

inline Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw usage_error("vertex " + std::to_string(v) + " out of range");
  return delete_vertices(g, bit(v));
}

// ---- constructions ---------------------------------------------------------

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
  if (n < 1) throw domain_error("complete graph needs at least one vertex");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw domain_error("cycle needs at least three vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path(std::size_t n) {
  if (n < 1) throw domain_error("path needs at least one vertex");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

/// G ⊔ H with H's vertices shifted by |G|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  Graph out(n + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + n, v + n);
  return out;
}

/// G * H: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

inline Graph m_copies(std::size_t m, const Graph& g) {
  if (m < 1) throw domain_error("m_copies needs m >= 1");
  Graph out = g;
  for (std::size_t i = 1; i < m; ++i) out = disjoint_union(out, g);
  return out;
}

// ---- structural predicates -------------------------------------------------

inline bool has_isolated_vertex(const Graph& g) noexcept {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.adjacency(v) == 0) return true;
  return false;
}

inline Mask isolated_vertices(const Graph& g) noexcept {
  Mask out = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.adjacency(v) == 0) out |= bit(v);
  return out;
}

inline Mask component_of(const Graph& g, Vertex start) noexcept {
  Mask seen = bit(start), frontier = bit(start);
  while (frontier) {
    Mask next = 0;
    for (Vertex v : vertices_of(frontier)) next |= g.adjacency(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

// The null graph counts as connected.
inline bool is_connected(const Graph& g) noexcept {
  return g.order() == 0 || component_of(g, 0) == g.vertex_mask();
}

inline bool is_bipartite(const Graph& g) noexcept {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : vertices_of(g.adjacency(v))) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline std::size_t triangles_at(const Graph& g, Vertex v) noexcept {
  std::size_t twice = 0;
  Mask nv = g.adjacency(v);
  for (Vertex u : vertices_of(nv)) twice += popcount(g.adjacency(u) & nv);
  return twice / 2;
}

inline bool is_triangle_free(const Graph& g) noexcept {
  for (auto [u, v] : g.edges())
    if (g.adjacency(u) & g.adjacency(v)) return false;
  return true;
}

// Maximum cardinality search, then verify the reverse order is a perfect
// elimination ordering.
inline bool is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<Vertex> order;
  Mask unnumbered = g.vertex_mask();
  while (unnumbered) {
    Vertex best = lowest_vertex(unnumbered);
    for (Vertex v : vertices_of(unnumbered))
      if (weight[v] > weight[best]) best = v;
    order.push_back(best);
    unnumbered &= ~bit(best);
    for (Vertex u : vertices_of(g.adjacency(best) & unnumbered)) ++weight[u];
  }
  // In MCS order, the earlier-numbered neighbours of each vertex must form a clique.
  Mask earlier = 0;
  for (Vertex v : order) {
    Mask back = g.adjacency(v) & earlier;
    for (Vertex u : vertices_of(back)) {
      if ((back & ~bit(u) & ~g.adjacency(u)) != 0) return false;
    }
    earlier |= bit(v);
  }
  return true;
}

/// True when G is a perfect matching, i.e. isomorphic to mK₂ for some m ≥ 1.
inline bool is_disjoint_edges(const Graph& g) noexcept {
  if (g.order() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (popcount(g.adjacency(v)) != 1) return false;
  return true;
}

}  // namespace glab

#endif  // GLAB_GRAPH_HPP
