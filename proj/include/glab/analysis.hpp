#ifndef GLAB_ANALYSIS_HPP
#define GLAB_ANALYSIS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "glab/complex.hpp"
#include "glab/graph_io.hpp"
#include "glab/homology.hpp"
#include "glab/independence.hpp"
#include "glab/planarity.hpp"

namespace glab {

struct FieldReport {
  FieldSpec field = FieldSpec::rationals();
  bool cohen_macaulay = false;  // Δ(G) itself
  std::optional<ReisnerWitness> reisner_witness;
  bool cohen_macaulay_of_core = false;
  bool gorenstein = false;
  HomologyReport homology;
};

struct AnalysisReport {
  std::string graph6;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t alpha = 0;
  std::int64_t reduced_euler_char = 0;
  bool well_covered = false;
  std::optional<bool> w2;  // undefined below two vertices
  bool semi_eulerian = false;
  bool eulerian = false;
  EulerStatus euler_status = EulerStatus::failed;
  std::optional<Mask> euler_witness;
  bool planar = false;
  PseudoPlanarVerdict pseudo_planar;
  Mask isolated = 0;
  std::vector<FieldReport> fields;

  bool has_isolated_vertices() const noexcept { return isolated != 0; }

  const FieldReport& field(const FieldSpec& f) const {
    for (const auto& r : fields)
      if (r.field == f) return r;
    throw usage_error("field " + f.name() + " was not analysed");
  }

  bool gorenstein_everywhere() const {
    return std::all_of(fields.begin(), fields.end(), [](const FieldReport& r) { return r.gorenstein; });
  }
  bool gorenstein_somewhere() const {
    return std::any_of(fields.begin(), fields.end(), [](const FieldReport& r) { return r.gorenstein; });
  }
};

/// Every predicate for one graph. Graphs with isolated vertices are allowed:
/// Gorenstein-ness goes through the core, and `isolated` records the warning.
inline AnalysisReport analyze(const Graph& g, const std::vector<FieldSpec>& fields = default_fields()) {
  if (g.order() == 0) throw usage_error("analysis needs a graph with at least one vertex");
  AnalysisReport r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.edges = g.edge_count();
  r.alpha = independence_number(g);
  r.isolated = isolated_vertices(g);

  const SimplicialComplex delta = independence_complex(g);
  r.reduced_euler_char = reduced_euler_char(delta);
  r.well_covered = is_pure(delta);
  if (g.order() >= 2) r.w2 = is_w2(g);
  r.semi_eulerian = is_semi_eulerian(delta);
  const EulerCheck euler = check_euler(delta);
  r.eulerian = euler.holds();
  r.euler_status = euler.status;
  r.euler_witness = euler.witness;
  r.planar = is_planar(g);
  r.pseudo_planar = is_pseudo_planar(g);

  const SimplicialComplex k = core(delta);
  const bool core_is_delta = k == delta;
  const bool core_euler = core_is_delta ? r.eulerian : is_euler_complex(k);
  for (const FieldSpec& f : fields) {
    FieldReport fr;
    fr.field = f;
    fr.homology = reduced_homology_dims(delta, f);
    auto cm = is_cohen_macaulay(delta, f);
    fr.cohen_macaulay = cm.holds;
    fr.reisner_witness = cm.witness;
    fr.cohen_macaulay_of_core = core_is_delta ? cm.holds : is_cohen_macaulay(k, f).holds;
    fr.gorenstein = core_euler && fr.cohen_macaulay_of_core;
    r.fields.push_back(std::move(fr));
  }
  return r;
}

}  // namespace glab

#endif  // GLAB_ANALYSIS_HPP
