#ifndef GLAB_PLANARITY_HPP
#define GLAB_PLANARITY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "glab/graph.hpp"
#include "glab/independence.hpp"
#include "glab/isomorphism.hpp"

namespace glab {

namespace detail {

// Left-right planarity test (de Fraysseix–Rosenstiehl, in Brandes'
// formulation): DFS orientation with lowpoints and nesting depths, then a
// second DFS that maintains the stack of conflict pairs of return edges.
class LrPlanarity {
 public:
  explicit LrPlanarity(const Graph& g) : g_(g), n_(g.order()) {}

  bool run() {
    const std::size_t m = g_.edge_count();
    if (n_ > 2 && m > 3 * n_ - 6) return false;

    for (auto [u, v] : g_.edges()) {
      edge_ends_.push_back({u, v});
    }
    src_.assign(m, kNone);
    dst_.assign(m, kNone);
    lowpt_.assign(m, 0);
    lowpt2_.assign(m, 0);
    nesting_.assign(m, 0);
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, 0);
    height_.assign(n_, kUnset);
    parent_edge_.assign(n_, kNone);
    incident_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(m); ++e) {
      incident_[edge_ends_[e].first].push_back(e);
      incident_[edge_ends_[e].second].push_back(e);
    }
    out_.assign(n_, {});

    std::vector<Vertex> roots;
    for (Vertex v = 0; v < n_; ++v) {
      if (height_[v] != kUnset) continue;
      height_[v] = 0;
      roots.push_back(v);
      orient(v);
    }
    for (Vertex v = 0; v < n_; ++v) {
      std::stable_sort(out_[v].begin(), out_[v].end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });
    }
    for (Vertex r : roots)
      if (!test(r)) return false;
    return true;
  }

 private:
  static constexpr int kNone = -1;
  static constexpr int kUnset = -1;

  struct Interval {
    int low = kNone, high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left, right;
    void swap() { std::swap(left, right); }
  };

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void orient(Vertex v) {
    const int e = parent_edge_[v];
    for (int vw : incident_[v]) {
      if (src_[vw] != kNone) continue;
      Vertex w = edge_ends_[vw].first == v ? edge_ends_[vw].second : edge_ends_[vw].first;
      src_[vw] = static_cast<int>(v);
      dst_[vw] = static_cast<int>(w);
      out_[v].push_back(vw);
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] == kUnset) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) nesting_[vw] += 1;
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool test(Vertex v) {
    const int e = parent_edge_[v];
    for (int ei : out_[v]) {
      stack_bottom_[ei] = stack_.size();
      Vertex w = static_cast<Vertex>(dst_[ei]);
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {
        if (ei == out_[v].front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() != stack_bottom_[ei]);

    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else if (p.left.low != kNone) {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair& p = stack_.back();
      while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      int hl = stack_.back().left.high, hr = stack_.back().right.high;
      ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> edge_ends_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<int> height_, parent_edge_;
  std::vector<std::vector<int>> incident_, out_;
  std::vector<ConflictPair> stack_;
};

inline bool has_k5_subgraph(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  // Extend cliques in ascending vertex order.
  auto grow = [&](auto&& self, Mask cand, int need) -> bool {
    if (need == 0) return true;
    while (cand) {
      if (static_cast<int>(popcount(cand)) < need) return false;
      Vertex v = lowest_vertex(cand);
      cand &= ~bit(v);
      if (self(self, cand & adj[v], need - 1)) return true;
    }
    return false;
  };
  return grow(grow, full_mask(n), 5);
}

inline bool has_k33_subgraph(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  // Side A: any 3 vertices; side B: 3 vertices among their common neighbours.
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        Mask common = adj[a] & adj[b] & adj[c];
        if (popcount(common) >= 3) return true;
      }
  return false;
}

}  // namespace detail

/// Planarity via the left-right criterion.
inline bool is_planar(const Graph& g) { return detail::LrPlanarity(g).run(); }

/// Slow independent oracle: searches every contraction of G (a partition of
/// V into connected branch sets, explored by contracting one edge at a
/// time) for a K₅ or K₃,₃ subgraph. Every minor is a subgraph of some
/// contraction, so this decides whether G has a Kuratowski minor.
inline bool has_kuratowski_minor(const Graph& g) {
  if (g.order() > 10) throw unsupported_error("minor search is limited to 10 vertices");
  using Adj = std::vector<Mask>;
  std::set<Adj> seen;
  auto search = [&](auto&& self, const Adj& adj) -> bool {
    if (adj.size() < 5) return false;
    std::size_t twice_edges = 0;
    for (Mask m : adj) twice_edges += popcount(m);
    if (twice_edges < 18) return false;  // K₃,₃ has 9 edges, K₅ has 10
    if (!seen.insert(adj).second) return false;
    if (detail::has_k5_subgraph(adj) || detail::has_k33_subgraph(adj)) return true;
    const std::size_t n = adj.size();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : vertices_of(adj[u] & ~full_mask(u + 1))) {
        // Contract uv: v merges into u, later labels shift down by one.
        auto relabel = [&](Mask m) {
          Mask low = m & full_mask(v), high = m & ~full_mask(v + 1);
          return low | (high >> 1);
        };
        Adj next;
        next.reserve(n - 1);
        for (Vertex w = 0; w < n; ++w) {
          if (w == v) continue;
          Mask m = adj[w];
          if (w == u) m |= adj[v];
          if (m & bit(v)) m = (m & ~bit(v)) | bit(u);
          m = relabel(m);
          next.push_back(m);
        }
        Vertex nu = u;  // u < v keeps its label
        next[nu] &= ~bit(nu);
        if (self(self, next)) return true;
      }
    }
    return false;
  };
  Adj adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.adjacency(v);
  return search(search, adj);
}

/// The fixed 8-vertex graph 2K₂ * 2K₂.
inline const Graph& two_k2_join_two_k2() {
  static const Graph g = join(m_copies(2, complete(2)), m_copies(2, complete(2)));
  return g;
}

/// Cheap filter before the isomorphism test: |V| = 8, |E| = 20, 5-regular.
inline bool is_two_k2_join_two_k2(const Graph& g) {
  if (g.order() != 8 || g.edge_count() != 20) return false;
  for (Vertex v = 0; v < 8; ++v)
    if (popcount(g.adjacency(v)) != 5) return false;
  return is_isomorphic(g, two_k2_join_two_k2());
}

enum class PseudoPlanarClause { delta_star_above_five, isomorphic_to_2k2_join_2k2 };

inline const char* to_string(PseudoPlanarClause c) {
  return c == PseudoPlanarClause::delta_star_above_five ? "delta_star_above_five" : "isomorphic_to_2K2*2K2";
}

struct PseudoPlanarWitness {
  VertexSet independent_set;
  PseudoPlanarClause clause;
  std::size_t delta_star = 0;  // δ*(G_S)
};

struct PseudoPlanarVerdict {
  bool verdict = true;
  std::optional<PseudoPlanarWitness> witness;

  explicit operator bool() const noexcept { return verdict; }
};

/// Checks δ*(G_S) ≤ 5 and G_S ≇ 2K₂*2K₂ for every independent S, ∅ included,
/// in ascending (size, mask) order. A null G_S passes (δ* taken as 0).
inline PseudoPlanarVerdict is_pseudo_planar(const Graph& g) {
  PseudoPlanarVerdict out;
  for_each_independent_set(g, [&](Mask s) {
    Graph local = localize_mask(g, s);
    if (local.order() == 0) return true;
    std::size_t ds = delta_star(local);
    if (ds > 5) {
      out = {false, PseudoPlanarWitness{VertexSet::from_mask(s, g.order()), PseudoPlanarClause::delta_star_above_five, ds}};
      return false;
    }
    if (is_two_k2_join_two_k2(local)) {
      out = {false,
             PseudoPlanarWitness{VertexSet::from_mask(s, g.order()), PseudoPlanarClause::isomorphic_to_2k2_join_2k2, ds}};
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace glab

#endif  // GLAB_PLANARITY_HPP
