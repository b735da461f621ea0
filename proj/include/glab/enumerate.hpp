#ifndef GLAB_ENUMERATE_HPP
#define GLAB_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "glab/graph.hpp"
#include "glab/isomorphism.hpp"
#include "glab/planarity.hpp"

namespace glab {

inline constexpr std::size_t kMaxEnumerationOrder = 9;

enum class GraphFilter : unsigned {
  connected = 1u << 0,
  no_isolated = 1u << 1,
  planar = 1u << 2,
  triangle_free = 1u << 3,
  bipartite = 1u << 4,
  chordal = 1u << 5,
};

class FilterSet {
 public:
  static constexpr std::array<GraphFilter, 6> all() {
    return {GraphFilter::connected,     GraphFilter::no_isolated, GraphFilter::planar,
            GraphFilter::triangle_free, GraphFilter::bipartite,   GraphFilter::chordal};
  }

  FilterSet() = default;
  FilterSet(std::initializer_list<GraphFilter> fs) {
    for (auto f : fs) add(f);
  }

  FilterSet& add(GraphFilter f) {
    bits_ |= static_cast<unsigned>(f);
    return *this;
  }
  bool has(GraphFilter f) const noexcept { return bits_ & static_cast<unsigned>(f); }
  bool empty() const noexcept { return bits_ == 0; }

  bool accepts(const Graph& g) const {
    if (has(GraphFilter::connected) && !is_connected(g)) return false;
    if (has(GraphFilter::no_isolated) && has_isolated_vertex(g)) return false;
    if (has(GraphFilter::triangle_free) && !is_triangle_free(g)) return false;
    if (has(GraphFilter::bipartite) && !is_bipartite(g)) return false;
    if (has(GraphFilter::chordal) && !is_chordal(g)) return false;
    if (has(GraphFilter::planar) && !is_planar(g)) return false;
    return true;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (auto f : all())
      if (has(f)) out.emplace_back(name(f));
    return out;
  }

  static const char* name(GraphFilter f) {
    switch (f) {
      case GraphFilter::connected: return "connected";
      case GraphFilter::no_isolated: return "no-isolated";
      case GraphFilter::planar: return "planar";
      case GraphFilter::triangle_free: return "triangle-free";
      case GraphFilter::bipartite: return "bipartite";
      case GraphFilter::chordal: return "chordal";
    }
    return "?";
  }

  static GraphFilter parse(std::string_view s) {
    for (auto f : all())
      if (s == name(f)) return f;
    throw usage_error("unknown filter '" + std::string(s) + "'");
  }

 private:
  unsigned bits_ = 0;
};

namespace detail {

// Every graph on n vertices arises from one on n-1 by adding a vertex of
// maximum degree, so only those extensions are generated; isomorphs are
// dropped via digest buckets and an explicit isomorphism test.
inline std::vector<Graph> extend_by_one(const std::vector<Graph>& parents, std::size_t n) {
  std::vector<Graph> out;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  const std::size_t m = n - 1;
  for (const Graph& h : parents) {
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < m; ++v) max_deg = std::max(max_deg, h.degree(v));
    std::vector<std::size_t> deg(m);
    for (Vertex v = 0; v < m; ++v) deg[v] = h.degree(v);
    for (Mask nb = 0; nb <= full_mask(m); ++nb) {
      const std::size_t k = popcount(nb);
      // new vertex degree k must dominate every old degree after the addition
      if (k < max_deg) continue;
      bool ok = true;
      for (Vertex v = 0; v < m && ok; ++v) ok = deg[v] + ((nb >> v) & 1) <= k;
      if (!ok) continue;
      Graph g(n);
      for (auto [u, v] : h.edges()) g.add_edge(u, v);
      for (Vertex u : vertices_of(nb)) g.add_edge(u, m);
      auto& bucket = buckets[invariant_digest(g)];
      bool seen = false;
      for (std::size_t idx : bucket) {
        if (is_isomorphic(out[idx], g)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        bucket.push_back(out.size());
        out.push_back(std::move(g));
      }
      if (m == 0) break;
    }
  }
  return out;
}

struct EnumerationCache {
  std::mutex lock;
  std::vector<std::vector<Graph>> by_order;  // by_order[n] for n >= 1
};

inline EnumerationCache& enumeration_cache() {
  static EnumerationCache cache;
  return cache;
}

}  // namespace detail

/// One representative per isomorphism class of graphs on exactly n vertices,
/// in a fixed deterministic order. 1 <= n <= 9.
inline const std::vector<Graph>& all_graphs(std::size_t n) {
  if (n == 0) throw usage_error("enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) throw unsupported_error("built-in enumeration stops at 9 vertices; stream graph6 instead");
  auto& cache = detail::enumeration_cache();
  std::lock_guard guard(cache.lock);
  if (cache.by_order.empty()) cache.by_order = {{}, {Graph(1)}};
  while (cache.by_order.size() <= n) {
    const std::size_t next = cache.by_order.size();
    cache.by_order.push_back(detail::extend_by_one(cache.by_order[next - 1], next));
  }
  return cache.by_order[n];
}

inline std::vector<Graph> enumerate_graphs(std::size_t n, const FilterSet& filter = {}) {
  const auto& all = all_graphs(n);
  if (filter.empty()) return all;
  std::vector<Graph> out;
  for (const Graph& g : all)
    if (filter.accepts(g)) out.push_back(g);
  return out;
}

/// Graphs on 1..n_max vertices, ordered by vertex count.
inline std::vector<Graph> graphs_up_to(std::size_t n_max, const FilterSet& filter = {}) {
  if (n_max > kMaxEnumerationOrder) throw unsupported_error("built-in enumeration stops at 9 vertices; stream graph6 instead");
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto part = enumerate_graphs(n, filter);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace glab

#endif  // GLAB_ENUMERATE_HPP
