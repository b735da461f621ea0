#ifndef GLAB_VERIFY_HPP
#define GLAB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glab/analysis.hpp"
#include "glab/enumerate.hpp"
#include "glab/parallel.hpp"

namespace glab {

struct Discrepancy {
  std::string check;
  std::string graph6;  // empty for non-graph instances
  std::string detail;
  std::optional<AnalysisReport> report;
};

struct SweepReport {
  std::string check;
  std::size_t n_max = 0;
  std::vector<std::string> filters;
  std::vector<std::string> fields;
  std::size_t graphs_checked = 0;
  std::size_t in_scope = 0;
  std::map<std::size_t, std::size_t> counts_by_order;
  std::map<std::string, std::size_t> counts;
  std::vector<Discrepancy> discrepancies;
  std::vector<Discrepancy> notes;
  std::vector<std::string> survivors;  // graph6, for classifications that return graphs
  std::vector<AnalysisReport> rows;

  bool ok() const noexcept { return discrepancies.empty(); }

  void absorb(std::vector<Discrepancy> ds) {
    for (auto& d : ds) discrepancies.push_back(std::move(d));
  }
};

namespace detail {

inline std::vector<std::string> field_names(const std::vector<FieldSpec>& fields) {
  std::vector<std::string> out;
  for (const auto& f : fields) out.push_back(f.name());
  return out;
}

inline void require_order(std::size_t n_max, std::size_t cap, const char* what) {
  if (n_max == 0) throw usage_error(std::string(what) + " needs n >= 1");
  if (n_max > cap) throw unsupported_error(std::string(what) + " is limited to " + std::to_string(cap) + " vertices");
}

}  // namespace detail

// ---- Gorenstein vs Eulerian sweep ----------------------------------------------

/// For every graph without isolated vertices that is pseudo-planar, checks
/// Gorenstein(G, f) == Eulerian(Δ(G)) for each field f.
inline SweepReport verify_main_theorem(const std::vector<Graph>& graphs,
                                       const std::vector<FieldSpec>& fields = default_fields(), std::size_t jobs = 1) {
  SweepReport rep;
  rep.check = "main-theorem";
  rep.fields = detail::field_names(fields);
  rep.rows = parallel_map(graphs, [&](const Graph& g) { return analyze(g, fields); }, jobs);
  for (const auto& row : rep.rows) {
    ++rep.graphs_checked;
    ++rep.counts_by_order[row.n];
    rep.n_max = std::max(rep.n_max, row.n);
    const bool in_scope = !row.has_isolated_vertices() && row.pseudo_planar.verdict;
    const bool fields_agree = row.gorenstein_everywhere() || !row.gorenstein_somewhere();
    if (in_scope) {
      ++rep.in_scope;
      if (row.eulerian) ++rep.counts["in_scope_eulerian"];
      if (row.gorenstein_everywhere()) ++rep.counts["in_scope_gorenstein"];
      for (const auto& f : row.fields) {
        if (f.gorenstein != row.eulerian) {
          rep.discrepancies.push_back({"main-theorem", row.graph6,
                                       std::string("gorenstein over ") + f.field.name() + " is " +
                                           (f.gorenstein ? "true" : "false") + " but eulerian is " +
                                           (row.eulerian ? "true" : "false"),
                                       row});
        }
      }
      if (!fields_agree) rep.discrepancies.push_back({"field-agreement", row.graph6, "Gorenstein depends on the field", row});
    } else {
      if (row.eulerian && !row.gorenstein_somewhere() && !row.pseudo_planar.verdict) {
        rep.notes.push_back({"out-of-scope", row.graph6, "Eulerian ∧ ¬Gorenstein ∧ ¬pseudo-planar", std::nullopt});
      }
      if (!fields_agree) rep.notes.push_back({"field-agreement", row.graph6, "Gorenstein depends on the field", std::nullopt});
    }
  }
  return rep;
}

inline SweepReport verify_main_theorem(std::size_t n_max, const std::vector<FieldSpec>& fields = default_fields(),
                                       std::size_t jobs = 1, const FilterSet& filter = {}) {
  detail::require_order(n_max, kMaxEnumerationOrder, "Gorenstein/Eulerian sweep");
  auto rep = verify_main_theorem(graphs_up_to(n_max, filter), fields, jobs);
  rep.n_max = n_max;
  rep.filters = filter.names();
  return rep;
}

// ---- isolating sets and the five-vertex classification -----------------------

/// First independent X of H (∅ first, then by size and mask) such that every
/// nonempty independent S of H \ X leaves H_S empty or with an isolated vertex.
inline std::optional<VertexSet> a3_condition(const Graph& h) {
  std::optional<VertexSet> found;
  const auto sets = independent_set_masks(h);
  for_each_independent_set(h, [&](Mask x) {
    for (Mask s : sets) {
      if (s == 0 || (s & x)) continue;
      Graph local = localize_mask(h, s);
      if (local.order() != 0 && !has_isolated_vertex(local)) return true;  // this X fails
    }
    found = VertexSet::from_mask(x, h.order());
    return false;
  });
  return found;
}

/// Graphs on at most 5 vertices with χ̃(Δ(G)) = 0 for which no independent X
/// is an isolating set in the sense above, one per isomorphism class.
inline std::vector<Graph> classify_a4() {
  std::vector<Graph> out;
  for (const Graph& g : graphs_up_to(5)) {
    if (reduced_euler_char(independence_complex(g)) != 0) continue;
    if (!a3_condition(g)) out.push_back(g);
  }
  return out;
}

inline SweepReport verify_a4() {
  SweepReport rep;
  rep.check = "a4";
  rep.n_max = 5;
  for (std::size_t n = 1; n <= 5; ++n) rep.counts_by_order[n] = all_graphs(n).size();
  for (const auto& [n, c] : rep.counts_by_order) rep.graphs_checked += c;
  for (const Graph& g : classify_a4()) rep.survivors.push_back(to_graph6(g));
  rep.counts["survivors"] = rep.survivors.size();
  if (rep.survivors.size() != 2) {
    rep.discrepancies.push_back(
        {"a4", "", "expected 2 survivors, found " + std::to_string(rep.survivors.size()), std::nullopt});
  }
  return rep;
}

// ---- classifications ----------------------------------------------------------

/// On graphs without isolated vertices: bipartite ⇒ (Gorenstein ⟺ mK₂),
/// chordal ⇒ (Gorenstein ⟺ mK₂), triangle-free ⇒ (Gorenstein ⟺ W₂).
inline SweepReport verify_classifications(std::size_t n_max, const std::vector<FieldSpec>& fields = default_fields(),
                                          std::size_t jobs = 1) {
  detail::require_order(n_max, 8, "classification sweep");
  SweepReport rep;
  rep.check = "classifications";
  rep.n_max = n_max;
  rep.fields = detail::field_names(fields);
  rep.filters = {"no-isolated"};
  const auto graphs = graphs_up_to(n_max, {GraphFilter::no_isolated});
  struct Row {
    std::vector<Discrepancy> found;
    bool bipartite, chordal, triangle_free;
  };
  auto rows = parallel_map(
      graphs,
      [&](const Graph& g) {
        Row row{{}, is_bipartite(g), is_chordal(g), is_triangle_free(g)};
        if (!row.bipartite && !row.chordal && !row.triangle_free) return row;
        const auto delta = independence_complex(g);
        const bool mk2 = is_disjoint_edges(g);
        const bool w2 = row.triangle_free ? is_w2(g) : false;
        for (const auto& f : fields) {
          const bool gor = is_gorenstein_complex(delta, f);
          const std::string tag = " over " + f.name();
          if (row.bipartite && gor != mk2)
            row.found.push_back({"bipartite", to_graph6(g), "Gorenstein != mK2" + tag, std::nullopt});
          if (row.chordal && gor != mk2)
            row.found.push_back({"chordal", to_graph6(g), "Gorenstein != mK2" + tag, std::nullopt});
          if (row.triangle_free && gor != w2)
            row.found.push_back({"triangle-free", to_graph6(g), "Gorenstein != W2" + tag, std::nullopt});
        }
        return row;
      },
      jobs);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++rep.graphs_checked;
    ++rep.counts_by_order[graphs[i].order()];
    if (rows[i].bipartite) ++rep.counts["bipartite"];
    if (rows[i].chordal) ++rep.counts["chordal"];
    if (rows[i].triangle_free) ++rep.counts["triangle-free"];
    if (rows[i].bipartite || rows[i].chordal || rows[i].triangle_free) ++rep.in_scope;
    rep.absorb(std::move(rows[i].found));
  }
  return rep;
}

// ---- property suite -----------------------------------------------------------

inline constexpr std::uint64_t kDefaultSeed = 20240531;

/// Σ_{F ∈ Δ} χ̃(lk F).
inline std::int64_t link_euler_sum(const SimplicialComplex& c) {
  std::int64_t sum = 0;
  for (Mask f : c.faces()) sum += reduced_euler_char(link(c, f));
  return sum;
}

/// Random non-void complex on at most `max_n` vertices from a handful of
/// random generators.
inline SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t max_n = 6) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_n)(rng);
  const std::size_t gens = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  std::vector<Mask> facets;
  for (std::size_t i = 0; i < gens; ++i) facets.push_back(pick(rng));
  return SimplicialComplex::from_facets(n, facets);
}

namespace detail {

struct LemmaTally {
  std::vector<Discrepancy> found;
  std::map<std::string, std::size_t> counts;

  void check(bool ok, const char* name, const std::string& g6, const std::string& detail) {
    ++counts[name];
    if (!ok) found.push_back({name, g6, detail, std::nullopt});
  }
};

inline std::string set_string(Mask s, std::size_t n) { return VertexSet::from_mask(s, n).to_string(); }

inline bool graph_gorenstein(const Graph& g, const FieldSpec& f) {
  // the null graph has Δ = {∅}, an Euler and Cohen-Macaulay complex
  return is_gorenstein_complex(independence_complex(g), f);
}

inline LemmaTally lemma_checks(const Graph& g, const std::vector<FieldSpec>& fields) {
  LemmaTally t;
  const std::size_t n = g.order();
  const std::string g6 = to_graph6(g);
  const auto delta = independence_complex(g);
  const int d = dimension(delta);
  const std::int64_t chi = reduced_euler_char(delta);
  const auto sets = independent_set_masks(g);

  if (n <= 6) t.check(link_euler_sum(delta) == -1, "link-sum", g6, "sum of link Euler characteristics != -1");

  for (const auto& f : fields) {
    auto h = reduced_homology_dims(delta, f);
    t.check(h.euler_characteristic() == chi, "euler-homology", g6, "alternating homology sum != chi over " + f.name());
  }

  for (Mask s : sets) {
    const Subgraph local = induced_mask(g, g.vertex_mask() & ~(s | detail::neighborhood_of(g, s)));
    const auto local_delta = independence_complex(local.graph);
    std::vector<Mask> mapped;
    for (Mask facet : local_delta.facet_masks()) {
      Mask m = 0;
      for (Vertex v : vertices_of(facet)) m |= bit(local.to_original[v]);
      mapped.push_back(m);
    }
    t.check(SimplicialComplex::from_facets(n, mapped) == link(delta, s), "link-localization", g6,
            "lk(S) != Delta(G_S) for S=" + set_string(s, n));
  }

  const bool semi = is_semi_eulerian(delta);
  if (semi) {
    const bool eulerian = is_euler_complex(delta);
    bool all_zero = true, some_zero = false;
    for (Vertex v = 0; v < n; ++v) {
      const std::int64_t chi_nv = reduced_euler_char(independence_complex(induced_mask(g, g.adjacency(v)).graph));
      const std::int64_t rhs = (d % 2 == 0 ? 1 : -1) * (1 + chi_nv);
      t.check(chi == rhs, "euler-recursion", g6, "recursion fails at v=" + std::to_string(v));
      all_zero = all_zero && chi_nv == 0;
      some_zero = some_zero || chi_nv == 0;
    }
    t.check(eulerian == all_zero && all_zero == some_zero, "eulerian-conditions", g6, "the three conditions disagree");
    if (n >= 2) t.check(is_w2(g), "semi-eulerian-w2", g6, "semi-Eulerian but not W2");
  }

  const bool wc = is_pure(delta);
  const std::size_t alpha = static_cast<std::size_t>(d + 1);
  if (wc) {
    for (Mask s : sets) {
      Graph local = localize_mask(g, s);
      const bool ok = is_well_covered(local) && independence_number(local) == alpha - popcount(s);
      t.check(ok, "well-covered-localization", g6, "S=" + set_string(s, n));
    }
  }

  const bool w2 = n >= 2 && is_w2(g);
  if (w2) {
    for (Mask s : sets) {
      if (popcount(s) >= alpha) continue;
      Graph local = localize_mask(g, s);
      t.check(local.order() >= 2 && is_w2(local), "w2-localization", g6, "G_S not in W2 for S=" + set_string(s, n));
    }
  }

  if (!has_isolated_vertex(g)) {
    for (const auto& f : fields) {
      if (!is_gorenstein_complex(delta, f)) continue;
      const std::string tag = " over " + f.name();
      t.check(is_cohen_macaulay(core(delta), f).holds, "gorenstein-cm-core", g6, "core not CM" + tag);
      const bool pm = is_pure(delta) && d >= 0 && is_pseudomanifold(delta);
      t.check(pm, "pseudomanifold", g6, "Gorenstein but not a pseudomanifold" + tag);
      for (Mask s = 0; s <= g.vertex_mask(); ++s) {
        if (!is_cone(restriction(delta, s))) continue;
        auto h = reduced_homology_dims(deletion(delta, s), f);
        t.check(h.acyclic(), "cone-deletion-acyclic", g6, "Delta\\S not acyclic for S=" + set_string(s, n) + tag);
      }
    }
  }

  if (w2) {
    for (const auto& f : fields) {
      bool locally = true;
      for (Vertex v = 0; v < n && locally; ++v) locally = graph_gorenstein(localize_mask(g, bit(v)), f);
      if (!locally) continue;
      for (Mask s : sets) {
        if (s == 0) continue;
        Graph local = localize_mask(g, s);
        const auto ld = independence_complex(local);
        const bool ok = graph_gorenstein(local, f) && is_euler_complex(ld) &&
                        dimension(ld) == d - static_cast<int>(popcount(s));
        t.check(ok, "local-gorenstein", g6, "S=" + set_string(s, n) + " over " + f.name());
      }
    }
  }
  return t;
}

}  // namespace detail

/// Runs the per-graph property checks over every graph on at most n_max vertices,
/// plus 500 seeded random complexes for the link-sum identity.
inline SweepReport verify_lemma_suite(std::size_t n_max, std::uint64_t seed = kDefaultSeed,
                                      const std::vector<FieldSpec>& fields = default_fields(), std::size_t jobs = 1) {
  detail::require_order(n_max, 7, "property suite");
  SweepReport rep;
  rep.check = "lemmas";
  rep.n_max = n_max;
  rep.fields = detail::field_names(fields);
  const auto graphs = graphs_up_to(n_max);
  auto tallies = parallel_map(graphs, [&](const Graph& g) { return detail::lemma_checks(g, fields); }, jobs);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++rep.graphs_checked;
    ++rep.counts_by_order[graphs[i].order()];
    for (const auto& [k, c] : tallies[i].counts) rep.counts[k] += c;
    rep.absorb(std::move(tallies[i].found));
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 500; ++i) {
    auto c = random_complex(rng);
    ++rep.counts["link-sum-random"];
    if (link_euler_sum(c) != -1) {
      rep.discrepancies.push_back({"link-sum-random", "", "complex " + fingerprint(c), std::nullopt});
    }
  }
  return rep;
}

}  // namespace glab

#endif  // GLAB_VERIFY_HPP
