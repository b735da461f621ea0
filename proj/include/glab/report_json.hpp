#ifndef GLAB_REPORT_JSON_HPP
#define GLAB_REPORT_JSON_HPP

#include <nlohmann/json.hpp>

#include "glab/analysis.hpp"
#include "glab/verify.hpp"

namespace glab {

using Json = nlohmann::ordered_json;

inline Json face_json(Mask face) {
  Json a = Json::array();
  for (Vertex v : vertices_of(face)) a.push_back(v);
  return a;
}

/// {"field": "Q"|"GF(p)", "dims": {"-1": .., "0": .., ...}}
inline Json to_json(const HomologyReport& h) {
  Json dims = Json::object();
  for (auto [i, d] : h.dims) dims[std::to_string(i)] = d;
  return Json{{"field", h.field.name()}, {"dims", dims}};
}

inline Json to_json(const PseudoPlanarVerdict& v) {
  Json j{{"verdict", v.verdict}};
  if (v.witness) {
    j["witness"] = Json{{"independent_set", face_json(v.witness->independent_set.mask())},
                        {"clause", to_string(v.witness->clause)},
                        {"delta_star", v.witness->delta_star}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const FieldReport& f) {
  Json j{{"field", f.field.name()},
         {"cohen_macaulay", f.cohen_macaulay},
         {"cohen_macaulay_of_core", f.cohen_macaulay_of_core},
         {"gorenstein", f.gorenstein},
         {"homology", to_json(f.homology)["dims"]}};
  if (f.reisner_witness) {
    j["reisner_witness"] = Json{{"face", face_json(f.reisner_witness->face)}, {"degree", f.reisner_witness->degree}};
  } else {
    j["reisner_witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const AnalysisReport& r) {
  Json j{{"graph6", r.graph6},
         {"n", r.n},
         {"edges", r.edges},
         {"alpha", r.alpha},
         {"reduced_euler_char", r.reduced_euler_char},
         {"well_covered", r.well_covered},
         {"w2", r.w2 ? Json(*r.w2) : Json(nullptr)},
         {"semi_eulerian", r.semi_eulerian},
         {"eulerian", r.eulerian},
         {"euler_status", to_string(r.euler_status)},
         {"euler_witness", r.euler_witness ? face_json(*r.euler_witness) : Json(nullptr)},
         {"planar", r.planar},
         {"pseudo_planar", to_json(r.pseudo_planar)}};
  Json fields = Json::object();
  for (const auto& f : r.fields) fields[f.field.name()] = to_json(f);
  j["fields"] = fields;
  Json warnings = Json::array();
  if (r.has_isolated_vertices()) {
    warnings.push_back(Json{{"isolated_vertices", face_json(r.isolated)}});
  }
  j["warnings"] = warnings;
  return j;
}

inline Json to_json(const Discrepancy& d) {
  Json j{{"check", d.check}, {"graph6", d.graph6}, {"detail", d.detail}};
  if (d.report) j["report"] = to_json(*d.report);
  return j;
}

/// Summary object; per-graph rows are emitted separately.
inline Json to_json(const SweepReport& r) {
  Json by_order = Json::object();
  for (auto [n, c] : r.counts_by_order) by_order[std::to_string(n)] = c;
  Json counts = Json::object();
  for (const auto& [k, c] : r.counts) counts[k] = c;
  Json disc = Json::array(), notes = Json::array();
  for (const auto& d : r.discrepancies) disc.push_back(to_json(d));
  for (const auto& d : r.notes) notes.push_back(to_json(d));
  Json j{{"check", r.check},
         {"n_max", r.n_max},
         {"filters", r.filters},
         {"fields", r.fields},
         {"graphs_checked", r.graphs_checked},
         {"in_scope", r.in_scope},
         {"counts_by_order", by_order},
         {"counts", counts},
         {"discrepancy_count", r.discrepancies.size()},
         {"discrepancies", disc},
         {"notes", notes}};
  if (!r.survivors.empty()) j["survivors"] = r.survivors;
  return j;
}

}  // namespace glab

#endif  // GLAB_REPORT_JSON_HPP
