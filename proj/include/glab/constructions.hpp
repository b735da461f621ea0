#ifndef GLAB_CONSTRUCTIONS_HPP
#define GLAB_CONSTRUCTIONS_HPP

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "glab/graph.hpp"
#include "glab/planarity.hpp"

namespace glab {

struct NamedGraph {
  enum class Kind { complete, cycle, path, disjoint_edges, pentagon_with_chord, bowtie, two_k2_join_two_k2 };

  Kind kind;
  std::size_t size = 0;  // n for K_n, C_n, P_n; m for mK₂

  /// Accepts K<n>, C<n>, P<n>, <m>K2, pentagon-chord, bowtie, 2K2*2K2.
  static NamedGraph parse(std::string_view name) {
    auto number = [&](std::string_view digits) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw usage_error("unknown graph name '" + std::string(name) + "'");
      }
      return v;
    };
    if (name == "pentagon-chord" || name == "pentagon_with_chord") return {Kind::pentagon_with_chord};
    if (name == "bowtie") return {Kind::bowtie};
    if (name == "2K2*2K2" || name == "two-k2-join-two-k2") return {Kind::two_k2_join_two_k2};
    if (name.size() >= 2 && name.ends_with("K2") && name != "K2" && std::isdigit(static_cast<unsigned char>(name[0]))) {
      return {Kind::disjoint_edges, number(name.substr(0, name.size() - 2))};
    }
    if (name.size() >= 2) {
      switch (name[0]) {
        case 'K': return {Kind::complete, number(name.substr(1))};
        case 'C': return {Kind::cycle, number(name.substr(1))};
        case 'P': return {Kind::path, number(name.substr(1))};
        default: break;
      }
    }
    throw usage_error("unknown graph name '" + std::string(name) + "'");
  }
};

/// Fixed graphs with the vertex labels x,y,z,s,t = 0..4 where applicable.
inline Graph named(const NamedGraph& which) {
  using K = NamedGraph::Kind;
  switch (which.kind) {
    case K::complete: return complete(which.size);
    case K::cycle: return cycle(which.size);
    case K::path: return path(which.size);
    case K::disjoint_edges: return m_copies(which.size, complete(2));
    case K::pentagon_with_chord:
      // xy, yz, zs, st, tx, ys
      return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
    case K::bowtie:
      // xy, yz, zx, ys, st, ty
      return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 4}, {4, 1}});
    case K::two_k2_join_two_k2: return two_k2_join_two_k2();
  }
  throw usage_error("unknown named graph");
}

inline Graph named(std::string_view name) { return named(NamedGraph::parse(name)); }

/// Adds a = n, b = n+1, c = n+2 to H with edges a–b, a–N_H(x), b–c, c–x.
inline Graph pinter_extension(const Graph& h, Vertex x) {
  if (x >= h.order()) throw domain_error("pinter_extension: vertex out of range");
  if (h.adjacency(x) == 0) throw domain_error("pinter_extension: vertex " + std::to_string(x) + " is isolated");
  const std::size_t n = h.order();
  if (n + 3 > kMaxVertices) throw unsupported_error("pinter_extension: result would exceed 64 vertices");
  Graph g(n + 3);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  const Vertex a = n, b = n + 1, c = n + 2;
  g.add_edge(a, b);
  for (Vertex u : vertices_of(h.adjacency(x))) g.add_edge(a, u);
  g.add_edge(b, c);
  g.add_edge(c, x);
  return g;
}

/// Applies pinter_extension `steps` times, always at vertex `x`.
inline Graph pinter_chain(Graph base, std::size_t steps, Vertex x = 0) {
  for (std::size_t i = 0; i < steps; ++i) base = pinter_extension(base, x);
  return base;
}

}  // namespace glab

#endif  // GLAB_CONSTRUCTIONS_HPP
