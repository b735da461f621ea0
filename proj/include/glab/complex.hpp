#ifndef GLAB_COMPLEX_HPP
#define GLAB_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "glab/graph.hpp"
#include "glab/independence.hpp"

namespace glab {

/// A simplicial complex on the vertex universe {0..n-1}, stored as the
/// antichain of its facets (sorted by mask value). No facets is the void
/// complex; a single empty facet is {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}); }

  static SimplicialComplex empty_face(std::size_t n) { return SimplicialComplex(n, {0}); }

  static SimplicialComplex simplex(std::size_t n, Mask vertices) { return from_facets(n, std::vector<Mask>{vertices}); }

  /// Builds the complex generated by `generators`; non-maximal and repeated
  /// generators are dropped.
  static SimplicialComplex from_facets(std::size_t n, std::vector<Mask> generators) {
    if (n > kMaxVertices) throw unsupported_error("complexes above 64 vertices are not supported");
    for (Mask f : generators) {
      if (f & ~full_mask(n)) throw usage_error("facet outside vertex universe of size " + std::to_string(n));
    }
    return SimplicialComplex(n, maximal_elements(std::move(generators)));
  }

  static SimplicialComplex from_facets(std::size_t n, const std::vector<VertexSet>& generators) {
    std::vector<Mask> masks;
    for (const auto& f : generators) {
      if (f.universe() != n) throw usage_error("facet universe does not match complex universe");
      masks.push_back(f.mask());
    }
    return from_facets(n, std::move(masks));
  }

  std::size_t universe() const noexcept { return n_; }
  bool is_void() const noexcept { return facets_.empty(); }
  const std::vector<Mask>& facet_masks() const noexcept { return facets_; }

  std::vector<VertexSet> facets() const {
    std::vector<VertexSet> out;
    for (Mask f : facets_) out.push_back(VertexSet::from_mask(f, n_));
    return out;
  }

  bool contains(Mask face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(), [&](Mask f) { return (face & ~f) == 0; });
  }

  /// Vertices x with {x} ∈ Δ.
  Mask vertex_mask() const noexcept {
    return std::accumulate(facets_.begin(), facets_.end(), Mask{0}, [](Mask a, Mask f) { return a | f; });
  }

  /// Every face, ascending by mask value (so ∅ first).
  std::vector<Mask> faces() const {
    std::vector<Mask> out;
    for (Mask f : facets_) {
      Mask sub = f;
      while (true) {
        out.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(std::size_t n, std::vector<Mask> facets) : n_(n), facets_(std::move(facets)) {}

  static std::vector<Mask> maximal_elements(std::vector<Mask> gens) {
    std::sort(gens.begin(), gens.end(), [](Mask a, Mask b) {
      return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Mask> kept;
    for (Mask g : gens) {
      bool covered = std::any_of(kept.begin(), kept.end(), [&](Mask k) { return (g & ~k) == 0; });
      if (!covered) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  std::size_t n_ = 0;
  std::vector<Mask> facets_;
};

namespace detail {

inline void require_nonvoid(const SimplicialComplex& c, const char* op) {
  if (c.is_void()) throw domain_error(std::string(op) + ": void complex");
}

inline Mask checked_subset(const SimplicialComplex& c, const VertexSet& s) {
  if (s.universe() != c.universe()) throw usage_error("vertex set universe does not match complex universe");
  return s.mask();
}

inline int sign_of_size(std::size_t k) noexcept { return (k % 2 == 0) ? 1 : -1; }

}  // namespace detail

/// Δ(G): facets are the maximal independent sets of G.
inline SimplicialComplex independence_complex(const Graph& g) {
  return SimplicialComplex::from_facets(g.order(), maximal_independent_sets(g));
}

/// lk_Δ F = {H ∈ Δ : H ∩ F = ∅, H ∪ F ∈ Δ}.
inline SimplicialComplex link(const SimplicialComplex& c, Mask face) {
  if (!c.contains(face)) throw domain_error("link: not a face of the complex");
  std::vector<Mask> gens;
  for (Mask f : c.facet_masks())
    if ((face & ~f) == 0) gens.push_back(f & ~face);
  return SimplicialComplex::from_facets(c.universe(), std::move(gens));
}

inline SimplicialComplex link(const SimplicialComplex& c, const VertexSet& face) {
  return link(c, detail::checked_subset(c, face));
}

/// st_Δ(v) = {F ∈ Δ : F ∪ {v} ∈ Δ}; void when v is not a vertex of Δ.
inline SimplicialComplex star(const SimplicialComplex& c, Vertex v) {
  if (v >= c.universe()) throw usage_error("star: vertex out of range");
  std::vector<Mask> gens;
  for (Mask f : c.facet_masks())
    if (f & bit(v)) gens.push_back(f);
  return SimplicialComplex::from_facets(c.universe(), std::move(gens));
}

/// Δ \ S = {F ∈ Δ : F ∩ S = ∅}.
inline SimplicialComplex deletion(const SimplicialComplex& c, Mask s) {
  std::vector<Mask> gens;
  for (Mask f : c.facet_masks()) gens.push_back(f & ~s);
  return SimplicialComplex::from_facets(c.universe(), std::move(gens));
}

inline SimplicialComplex deletion(const SimplicialComplex& c, const VertexSet& s) {
  return deletion(c, detail::checked_subset(c, s));
}

/// Δ|_S = {F ∈ Δ : F ⊆ S}.
inline SimplicialComplex restriction(const SimplicialComplex& c, Mask s) {
  std::vector<Mask> gens;
  for (Mask f : c.facet_masks()) gens.push_back(f & s);
  return SimplicialComplex::from_facets(c.universe(), std::move(gens));
}

inline SimplicialComplex restriction(const SimplicialComplex& c, const VertexSet& s) {
  return restriction(c, detail::checked_subset(c, s));
}

/// Vertices lying in every facet.
inline Mask cone_points(const SimplicialComplex& c) {
  detail::require_nonvoid(c, "cone_points");
  Mask all = full_mask(c.universe());
  for (Mask f : c.facet_masks()) all &= f;
  return all;
}

inline bool is_cone(const SimplicialComplex& c) { return cone_points(c) != 0; }

/// Restriction to the vertices whose star is a proper subcomplex.
inline SimplicialComplex core(const SimplicialComplex& c) {
  detail::require_nonvoid(c, "core");
  return restriction(c, c.vertex_mask() & ~cone_points(c));
}

// ---- counting ----------------------------------------------------------------

inline int dimension(const SimplicialComplex& c) {
  detail::require_nonvoid(c, "dimension");
  std::size_t top = 0;
  for (Mask f : c.facet_masks()) top = std::max(top, popcount(f));
  return static_cast<int>(top) - 1;
}

inline bool is_pure(const SimplicialComplex& c) {
  detail::require_nonvoid(c, "is_pure");
  const std::size_t k = popcount(c.facet_masks().front());
  return std::all_of(c.facet_masks().begin(), c.facet_masks().end(), [&](Mask f) { return popcount(f) == k; });
}

/// f_{-1}, f_0, ..., f_d.
inline std::vector<std::int64_t> f_vector(const SimplicialComplex& c) {
  detail::require_nonvoid(c, "f_vector");
  std::vector<std::int64_t> f(static_cast<std::size_t>(dimension(c) + 2), 0);
  for (Mask face : c.faces()) ++f[popcount(face)];
  return f;
}

/// χ̃(Δ) = Σ_{F ∈ Δ} (-1)^{|F|-1}.
inline std::int64_t reduced_euler_char(const SimplicialComplex& c) {
  auto f = f_vector(c);
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * f[k];
  return chi;
}

// ---- Euler-type predicates ---------------------------------------------------

enum class EulerStatus { eulerian, impure, failed };

struct EulerCheck {
  EulerStatus status;
  std::optional<Mask> witness;  // first failing face when status == failed

  bool holds() const noexcept { return status == EulerStatus::eulerian; }
};

inline const char* to_string(EulerStatus s) {
  switch (s) {
    case EulerStatus::eulerian: return "eulerian";
    case EulerStatus::impure: return "impure";
    case EulerStatus::failed: return "non_eulerian";
  }
  return "?";
}

/// Euler complex test: pure, and χ̃(lk F) = (-1)^{dim lk F} for every face F,
/// F = ∅ included. Faces are visited in ascending mask order.
inline EulerCheck check_euler(const SimplicialComplex& c) {
  if (!is_pure(c)) return {EulerStatus::impure, std::nullopt};
  const int d = dimension(c);
  const auto faces = c.faces();
  for (Mask f : faces) {
    // χ̃(lk F) = Σ_{H ⊇ F} (-1)^{|H|-|F|-1}
    std::int64_t chi = 0;
    const std::size_t fs = popcount(f);
    for (Mask h : faces)
      if ((h & f) == f) chi -= detail::sign_of_size(popcount(h) - fs);
    const int link_dim = d - static_cast<int>(fs);
    const std::int64_t expected = (link_dim % 2 == 0) ? 1 : -1;
    if (chi != expected) return {EulerStatus::failed, f};
  }
  return {EulerStatus::eulerian, std::nullopt};
}

inline bool is_euler_complex(const SimplicialComplex& c) { return check_euler(c).holds(); }

/// Pure, and the link of every vertex is an Euler complex.
inline bool is_semi_eulerian(const SimplicialComplex& c) {
  if (!is_pure(c)) return false;
  for (Vertex v : vertices_of(c.vertex_mask()))
    if (!is_euler_complex(link(c, bit(v)))) return false;
  return true;
}

/// Facet-path connectivity through ridges: |F_i ∩ F_{i+1}| = dim Δ.
inline bool is_connected_codim_one(const SimplicialComplex& c) {
  if (!is_pure(c)) throw domain_error("connectivity in codimension one needs a pure complex");
  const auto& facets = c.facet_masks();
  const std::size_t ridge = popcount(facets.front()) - (facets.front() ? 1 : 0);
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (seen[j] || popcount(facets[i] & facets[j]) != ridge) continue;
      seen[j] = true;
      ++reached;
      stack.push_back(j);
    }
  }
  return reached == facets.size();
}

/// Pseudomanifold without boundary: pure, every (d-1)-face in exactly two
/// facets, connected in codimension one.
inline bool is_pseudomanifold(const SimplicialComplex& c) {
  if (!is_pure(c)) throw domain_error("pseudomanifold test needs a pure complex");
  if (dimension(c) < 0) throw domain_error("pseudomanifold test needs dimension >= 0");
  std::map<Mask, int> ridge_degree;
  for (Mask f : c.facet_masks())
    for (Vertex v : vertices_of(f)) ++ridge_degree[f & ~bit(v)];
  for (const auto& [r, deg] : ridge_degree)
    if (deg != 2) return false;
  return is_connected_codim_one(c);
}

}  // namespace glab

#endif  // GLAB_COMPLEX_HPP
