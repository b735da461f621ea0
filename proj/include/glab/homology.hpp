#ifndef GLAB_HOMOLOGY_HPP
#define GLAB_HOMOLOGY_HPP

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glab/complex.hpp"
#include "glab/field.hpp"
#include "glab/linalg.hpp"

namespace glab {

/// ∂_i : C̃_i → C̃_{i-1}. Rows are (i-1)-faces, columns i-faces, both in
/// ascending mask order; C̃_{-1} has the single basis element e_∅.
struct BoundaryMatrix {
  int degree = 0;
  std::vector<Mask> row_faces;
  std::vector<Mask> col_faces;
  SparseIntMatrix matrix;
};

/// faces grouped by cardinality: result[k] holds the (k-1)-faces, ascending.
inline std::vector<std::vector<Mask>> faces_by_size(const SimplicialComplex& c) {
  detail::require_nonvoid(c, "faces_by_size");
  std::vector<std::vector<Mask>> out(static_cast<std::size_t>(dimension(c) + 2));
  for (Mask f : c.faces()) out[popcount(f)].push_back(f);
  return out;
}

inline BoundaryMatrix make_boundary(int degree, const std::vector<Mask>& rows, const std::vector<Mask>& cols) {
  BoundaryMatrix b;
  b.degree = degree;
  b.row_faces = rows;
  b.col_faces = cols;
  b.matrix = SparseIntMatrix(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    SparseIntMatrix::Column col;
    std::int64_t sign = 1;
    // ∂(e_{j0} ∧ ... ∧ e_{ji}) = Σ_s (-1)^s e_{... ĵs ...}
    for (Vertex v : vertices_of(cols[c])) {
      Mask facet = cols[c] & ~bit(v);
      auto it = std::lower_bound(rows.begin(), rows.end(), facet);
      col.emplace_back(static_cast<std::uint32_t>(it - rows.begin()), sign);
      sign = -sign;
    }
    b.matrix.set_column(c, std::move(col));
  }
  return b;
}

/// ∂_0, ..., ∂_d for the reduced chain complex.
inline std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c) {
  auto by_size = faces_by_size(c);
  std::vector<BoundaryMatrix> out;
  for (std::size_t k = 1; k < by_size.size(); ++k)
    out.push_back(make_boundary(static_cast<int>(k) - 1, by_size[k - 1], by_size[k]));
  return out;
}

inline std::string fingerprint(const SimplicialComplex& c) {
  std::string out = std::to_string(c.universe()) + ":";
  char buf[20];
  for (std::size_t i = 0; i < c.facet_masks().size(); ++i) {
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(c.facet_masks()[i]));
    if (i) out += ',';
    out += buf;
  }
  return out;
}

struct HomologyReport {
  FieldSpec field = FieldSpec::rationals();
  std::map<int, std::size_t> dims;  // degree -1..d
  std::string complex_fingerprint;

  std::size_t at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }

  bool acyclic() const {
    return std::all_of(dims.begin(), dims.end(), [](const auto& kv) { return kv.second == 0; });
  }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (auto [i, d] : dims) chi += ((i % 2 == 0) ? 1 : -1) * static_cast<std::int64_t>(d);
    return chi;
  }
};

/// dim H̃_i = nullity(∂_i) - rank(∂_{i+1}) for i = -1..d.
inline HomologyReport reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field) {
  auto by_size = faces_by_size(c);
  const int d = static_cast<int>(by_size.size()) - 2;
  // ranks[k] = rank ∂_{k-1}, the map out of the (k-1)-chains; ∂_{-1} = 0.
  std::vector<std::size_t> ranks(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k)
    ranks[k] = rank(make_boundary(static_cast<int>(k) - 1, by_size[k - 1], by_size[k]).matrix, field);
  HomologyReport report;
  report.field = field;
  report.complex_fingerprint = fingerprint(c);
  for (int i = -1; i <= d; ++i) {
    const std::size_t k = static_cast<std::size_t>(i + 1);
    report.dims[i] = by_size[k].size() - ranks[k] - ranks[k + 1];
  }
  return report;
}

// ---- Reisner / Stanley -------------------------------------------------------

struct ReisnerWitness {
  Mask face = 0;
  int degree = 0;
};

struct CohenMacaulayResult {
  bool holds = true;
  std::optional<ReisnerWitness> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Reisner: H̃_i(lk F) = 0 for every face F (∅ included) and every
/// i < dim lk F. Faces are visited by ascending dimension, then mask; the
/// first failure is returned as the witness.
inline CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field) {
  auto by_size = faces_by_size(c);
  for (const auto& level : by_size) {
    for (Mask f : level) {
      SimplicialComplex lk = link(c, f);
      const int dl = dimension(lk);
      if (dl <= 0) continue;  // only H̃_{-1} could matter and lk has a vertex
      auto h = reduced_homology_dims(lk, field);
      for (int i = -1; i < dl; ++i)
        if (h.at(i) != 0) return {false, ReisnerWitness{f, i}};
    }
  }
  return {};
}

struct GorensteinResult {
  bool gorenstein = false;
  EulerCheck euler_of_core{EulerStatus::failed, std::nullopt};
  CohenMacaulayResult cm_of_core;
};

/// Stanley: Δ is Gorenstein iff core(Δ) is a Cohen-Macaulay Euler complex.
inline GorensteinResult check_gorenstein(const SimplicialComplex& c, const FieldSpec& field) {
  SimplicialComplex k = core(c);
  GorensteinResult r;
  r.euler_of_core = check_euler(k);
  r.cm_of_core = is_cohen_macaulay(k, field);
  r.gorenstein = r.euler_of_core.holds() && r.cm_of_core.holds;
  return r;
}

inline bool is_gorenstein_complex(const SimplicialComplex& c, const FieldSpec& field) {
  SimplicialComplex k = core(c);
  return is_euler_complex(k) && is_cohen_macaulay(k, field).holds;
}

inline bool is_gorenstein_graph(const Graph& g, const FieldSpec& field) {
  if (g.order() == 0) throw usage_error("Gorenstein test needs a non-null graph");
  return is_gorenstein_complex(independence_complex(g), field);
}

}  // namespace glab

#endif  // GLAB_HOMOLOGY_HPP
