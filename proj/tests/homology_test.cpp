#include <gtest/gtest.h>

#include <map>
#include <random>

#include "glab/constructions.hpp"
#include "glab/enumerate.hpp"
#include "glab/graph_io.hpp"
#include "glab/homology.hpp"
#include "glab/planarity.hpp"
#include "glab/verify.hpp"
#include "oracles.hpp"

using namespace glab;

namespace {

SimplicialComplex delta(const Graph& g) { return independence_complex(g); }

const std::vector<FieldSpec> kFields = {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()};

std::map<int, std::size_t> dims_of(const SimplicialComplex& c, const FieldSpec& f) {
  return reduced_homology_dims(c, f).dims;
}

using Chain = std::map<Mask, std::int64_t>;

// sign of sorting the concatenation F·H into ascending order
std::int64_t wedge_sign(Mask f, Mask h) {
  std::size_t inversions = 0;
  for (Vertex a : vertices_of(f))
    for (Vertex b : vertices_of(h))
      if (a > b) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Chain wedge(const Chain& a, const Chain& b) {
  Chain out;
  for (auto [f, x] : a)
    for (auto [h, y] : b) {
      if (f & h) continue;
      out[f | h] += wedge_sign(f, h) * x * y;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// apply boundary matrices of a full simplex
Chain apply_boundary(const Chain& c, const std::vector<BoundaryMatrix>& mats) {
  Chain out;
  for (auto [f, x] : c) {
    const std::size_t k = popcount(f);
    if (k == 0) continue;
    const auto& m = mats[k - 1];
    auto it = std::lower_bound(m.col_faces.begin(), m.col_faces.end(), f);
    const std::size_t col = static_cast<std::size_t>(it - m.col_faces.begin());
    for (auto [row, v] : m.matrix.column(col)) out[m.row_faces[row]] += v * x;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Chain add(Chain a, const Chain& b, std::int64_t scale) {
  for (auto [f, x] : b) a[f] += scale * x;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

oracle::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  oracle::Matrix m(rows, std::vector<std::int64_t>(cols, 0));
  std::uniform_int_distribution<int> pct(0, 99), val(-3, 3);
  for (auto& row : m)
    for (auto& x : row)
      if (pct(rng) < density) x = val(rng);
  return m;
}

SparseIntMatrix to_sparse(const oracle::Matrix& m) {
  SparseIntMatrix s(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t c = 0; c < s.cols(); ++c) {
    SparseIntMatrix::Column col;
    for (std::size_t r = 0; r < s.rows(); ++r)
      if (m[r][c]) col.emplace_back(static_cast<std::uint32_t>(r), m[r][c]);
    s.set_column(c, std::move(col));
  }
  return s;
}

}  // namespace

TEST(Field, ParseAndName) {
  EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("2"), FieldSpec::prime(2));
  EXPECT_EQ(FieldSpec::parse("GF(3)").name(), "GF(3)");
  EXPECT_EQ(FieldSpec::parse("2147483647").characteristic(), 2147483647u);
  EXPECT_THROW(FieldSpec::parse("4"), usage_error);
  EXPECT_THROW(FieldSpec::parse("1"), usage_error);
  EXPECT_THROW(FieldSpec::parse("x"), usage_error);
  EXPECT_THROW(FieldSpec::prime(2147483659ull), usage_error);
  EXPECT_EQ(default_fields(), kFields);
}

TEST(Boundary, SingleEdge) {
  auto mats = boundary_matrices(SimplicialComplex::simplex(2, 0b11));
  ASSERT_EQ(mats.size(), 2u);
  EXPECT_EQ(mats[0].matrix.dense(), (oracle::Matrix{{1, 1}}));
  // ∂(e0∧e1) = e1 − e0
  EXPECT_EQ(mats[1].row_faces, (std::vector<Mask>{0b01, 0b10}));
  EXPECT_EQ(mats[1].matrix.dense(), (oracle::Matrix{{-1}, {1}}));
}

TEST(Boundary, CycleShape) {
  auto mats = boundary_matrices(delta(cycle(5)));
  ASSERT_EQ(mats.size(), 2u);
  EXPECT_EQ(mats[1].matrix.rows(), 5u);
  EXPECT_EQ(mats[1].matrix.cols(), 5u);
  for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(mats[1].matrix.column(c).size(), 2u);
  EXPECT_THROW(boundary_matrices(SimplicialComplex::void_complex(3)), domain_error);
}

TEST(Boundary, ColumnsAlternate) {
  auto mats = boundary_matrices(SimplicialComplex::simplex(6, full_mask(6)));
  for (const auto& b : mats) {
    for (std::size_t c = 0; c < b.matrix.cols(); ++c) {
      const auto& col = b.matrix.column(c);
      ASSERT_EQ(col.size(), popcount(b.col_faces[c]));
      for (std::size_t s = 0; s < col.size(); ++s) {
        // entry for removing the s-th smallest vertex; rows are ascending so
        // removing a larger vertex yields a smaller row face
        const std::size_t pos = col.size() - 1 - s;
        EXPECT_EQ(col[s].second, pos % 2 == 0 ? 1 : -1);
      }
    }
  }
}

TEST(Boundary, SquaresToZero) {
  std::mt19937_64 rng(17);
  std::vector<SimplicialComplex> pool;
  for (int i = 0; i < 200; ++i) pool.push_back(random_complex(rng, 8));
  for (const Graph& g : all_graphs(6)) pool.push_back(delta(g));
  pool.push_back(SimplicialComplex::simplex(8, full_mask(8)));
  for (const auto& c : pool) {
    auto mats = boundary_matrices(c);
    for (std::size_t i = 0; i + 1 < mats.size(); ++i) {
      auto a = mats[i].matrix.dense(), b = mats[i + 1].matrix.dense();
      for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t col = 0; col < b[0].size(); ++col) {
          std::int64_t sum = 0;
          for (std::size_t k = 0; k < b.size(); ++k) sum += a[r][k] * b[k][col];
          ASSERT_EQ(sum, 0) << fingerprint(c);
        }
    }
  }
}

TEST(Boundary, LeibnizRule) {
  std::mt19937_64 rng(23);
  const auto mats = boundary_matrices(SimplicialComplex::simplex(8, full_mask(8)));
  std::uniform_int_distribution<Mask> pick(1, full_mask(8));
  int tested = 0;
  while (tested < 400) {
    const Mask f = pick(rng), h = pick(rng);
    if (f & h) continue;
    ++tested;
    const Chain w{{f, 1}}, v{{h, 1}};
    const int i = static_cast<int>(popcount(f)) - 1;
    Chain lhs = apply_boundary(wedge(w, v), mats);
    Chain rhs = add(wedge(apply_boundary(w, mats), v), wedge(w, apply_boundary(v, mats)), (i + 1) % 2 ? -1 : 1);
    EXPECT_EQ(lhs, rhs) << f << " " << h;
  }
}

TEST(Homology, Examples) {
  for (const auto& f : kFields) {
    EXPECT_EQ(dims_of(delta(cycle(5)), f), (std::map<int, std::size_t>{{-1, 0}, {0, 0}, {1, 1}}));
    auto simplex = dims_of(SimplicialComplex::simplex(4, full_mask(4)), f);
    for (auto [i, d] : simplex) EXPECT_EQ(d, 0u) << i;
    EXPECT_TRUE(reduced_homology_dims(star(delta(cycle(6)), 0), f).acyclic());
    EXPECT_EQ(dims_of(delta(cycle(4)), f), (std::map<int, std::size_t>{{-1, 0}, {0, 1}, {1, 0}}));
    EXPECT_EQ(dims_of(SimplicialComplex::empty_face(3), f), (std::map<int, std::size_t>{{-1, 1}}));
  }
  auto j = reduced_homology_dims(delta(two_k2_join_two_k2()), FieldSpec::prime(2));
  EXPECT_EQ(j.at(0), 1u);
  EXPECT_EQ(j.at(1), 2u);
  EXPECT_EQ(j.at(-1), 0u);
  EXPECT_THROW(reduced_homology_dims(SimplicialComplex::void_complex(2), FieldSpec::rationals()), domain_error);
}

TEST(Homology, TorsionSeparatesFields) {
  // six-vertex triangulation of the projective plane
  const int tris[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<Mask> facets;
  for (const auto& t : tris) facets.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  auto rp2 = SimplicialComplex::from_facets(6, facets);
  ASSERT_EQ(reduced_euler_char(rp2), 0);
  auto q = reduced_homology_dims(rp2, FieldSpec::rationals());
  auto two = reduced_homology_dims(rp2, FieldSpec::prime(2));
  EXPECT_TRUE(q.acyclic());
  EXPECT_EQ(two.at(1), 1u);
  EXPECT_EQ(two.at(2), 1u);
  EXPECT_EQ(oracle::homology(rp2.faces(), 2), two.dims);
  EXPECT_EQ(oracle::homology(rp2.faces(), 0), q.dims);
  EXPECT_FALSE(is_cohen_macaulay(rp2, FieldSpec::prime(2)).holds);
  EXPECT_TRUE(is_cohen_macaulay(rp2, FieldSpec::rationals()).holds);
}

TEST(Homology, MatchesOracleOnIndependenceComplexes) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      const auto faces = oracle::independent_sets(g);
      for (std::int64_t p : {0, 2, 3}) {
        const auto f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint64_t>(p));
        EXPECT_EQ(dims_of(delta(g), f), oracle::homology(faces, p)) << to_graph6(g) << " " << f.name();
      }
    }
}

TEST(Homology, MatchesOracleOnRandomComplexes) {
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 300; ++i) {
    auto c = random_complex(rng, 7);
    for (std::int64_t p : {0, 2, 3, 5}) {
      const auto f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint64_t>(p));
      EXPECT_EQ(dims_of(c, f), oracle::homology(c.faces(), p)) << fingerprint(c);
    }
  }
}

TEST(Homology, EulerCompatibility) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      const auto c = delta(g);
      const auto chi = reduced_euler_char(c);
      for (const auto& f : kFields) {
        auto h = reduced_homology_dims(c, f);
        EXPECT_EQ(h.euler_characteristic(), chi) << to_graph6(g);
        EXPECT_EQ(h.at(-1), 0u);
      }
    }
}

TEST(Homology, FieldIndependentOnGorensteinPseudoPlanar) {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (const Graph& g : all_graphs(n)) {
      if (has_isolated_vertex(g)) continue;
      const auto c = delta(g);
      if (!is_euler_complex(c) || !is_pseudo_planar(g).verdict) continue;
      const auto base = dims_of(c, kFields.front());
      bool gorenstein = true;
      for (const auto& f : kFields) {
        EXPECT_EQ(dims_of(c, f), base) << to_graph6(g);
        gorenstein = gorenstein && is_gorenstein_graph(g, f);
      }
      EXPECT_TRUE(gorenstein);
      ++seen;
    }
  EXPECT_EQ(seen, 11u);
}

TEST(CohenMacaulay, Examples) {
  for (const auto& f : kFields) {
    EXPECT_TRUE(is_cohen_macaulay(delta(cycle(5)), f).holds);
    EXPECT_TRUE(is_cohen_macaulay(SimplicialComplex::simplex(5, full_mask(5)), f).holds);
    auto c4 = is_cohen_macaulay(delta(cycle(4)), f);
    EXPECT_FALSE(c4.holds);
    ASSERT_TRUE(c4.witness.has_value());
    EXPECT_EQ(c4.witness->face, Mask{0});
    EXPECT_EQ(c4.witness->degree, 0);
  }
}

TEST(CohenMacaulay, MatchesReisnerByOracle) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      const auto c = delta(g);
      bool want = true;
      for (Mask f : c.faces()) {
        auto lk = link(c, f);
        auto h = oracle::homology(lk.faces(), 0);
        const int d = dimension(lk);
        for (auto [i, dim] : h)
          if (i < d && dim != 0) want = false;
      }
      EXPECT_EQ(is_cohen_macaulay(c, FieldSpec::rationals()).holds, want) << to_graph6(g);
    }
}

TEST(Gorenstein, Examples) {
  for (const auto& f : kFields) {
    EXPECT_TRUE(is_gorenstein_graph(complete(2), f));
    EXPECT_TRUE(is_gorenstein_graph(cycle(5), f));
    EXPECT_TRUE(is_gorenstein_graph(m_copies(3, complete(2)), f));
    EXPECT_FALSE(is_gorenstein_graph(two_k2_join_two_k2(), f));
    EXPECT_FALSE(is_gorenstein_graph(cycle(4), f));
    EXPECT_FALSE(is_gorenstein_graph(complete(3), f));
    EXPECT_TRUE(is_gorenstein_graph(Graph(1), f));
    EXPECT_THROW(is_gorenstein_graph(Graph(0), f), usage_error);
  }
}

TEST(Gorenstein, ImpliesCohenMacaulayCore) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      const auto c = delta(g);
      for (const auto& f : {FieldSpec::prime(2), FieldSpec::rationals()}) {
        auto r = check_gorenstein(c, f);
        EXPECT_EQ(r.gorenstein, is_gorenstein_graph(g, f));
        if (r.gorenstein) { EXPECT_TRUE(is_cohen_macaulay(core(c), f).holds); }
      }
    }
}

TEST(Gorenstein, DeletingConeIsAcyclic) {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      if (has_isolated_vertex(g)) continue;
      const auto c = delta(g);
      if (!is_gorenstein_complex(c, FieldSpec::rationals())) continue;
      for (Mask s = 0; s <= g.vertex_mask(); ++s) {
        auto r = restriction(c, s);
        if (!is_cone(r)) continue;
        for (const auto& f : kFields) EXPECT_TRUE(reduced_homology_dims(deletion(c, s), f).acyclic()) << to_graph6(g);
        ++checked;
      }
    }
  EXPECT_GT(checked, 100u);
}

TEST(LinearAlgebra, RanksMatchOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(0, 12);
  for (int t = 0; t < 400; ++t) {
    auto m = random_matrix(rng, dim(rng), dim(rng), 10 + t % 70);
    if (!m.empty() && m[0].empty()) continue;
    auto s = to_sparse(m);
    const std::size_t q = m.empty() ? 0 : oracle::rank_rational(m);
    EXPECT_EQ(rank(s, FieldSpec::rationals()), q);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const std::size_t want = m.empty() ? 0 : oracle::rank_mod_p(m, p);
      EXPECT_EQ(rank(s, FieldSpec::prime(p)), want);
      if (!m.empty()) {
        EXPECT_EQ(detail::rank_mod_p_sparse(s, p), want);
        EXPECT_EQ(detail::rank_mod_p_dense(s, p), want);
        if (p == 2) { EXPECT_EQ(detail::rank_gf2_dense(s), want); }
      }
    }
  }
}

TEST(LinearAlgebra, SparsePathAboveDenseLimit) {
  // ∂_2 of the full simplex on 30 vertices: 435 edges, 4060 triangles
  std::vector<Mask> edges, triangles;
  for (Vertex a = 0; a < 30; ++a)
    for (Vertex b = a + 1; b < 30; ++b) {
      edges.push_back(bit(a) | bit(b));
      for (Vertex c = b + 1; c < 30; ++c) triangles.push_back(bit(a) | bit(b) | bit(c));
    }
  std::sort(edges.begin(), edges.end());
  std::sort(triangles.begin(), triangles.end());
  auto b = make_boundary(2, edges, triangles);
  ASSERT_GT(b.matrix.rows() + b.matrix.cols(), kDenseLimit);
  // rank is C(29, 2)
  for (std::uint32_t p : {2u, 3u, 101u}) {
    EXPECT_EQ(rank(b.matrix, FieldSpec::prime(p)), 406u);
    EXPECT_EQ(detail::rank_mod_p_dense(b.matrix, p), 406u);
  }
  EXPECT_EQ(rank(b.matrix, FieldSpec::rationals()), 406u);
}

TEST(LinearAlgebra, RationalRankSurvivesOverflow) {
  const std::int64_t big = std::int64_t{1} << 40;
  oracle::Matrix m{{big, 3, 5, 1}, {big + 1, 7, 11, -big}, {2 * big + 1, 10, 16, 1 - big}, {big - 7, big, 1, 2}};
  EXPECT_EQ(oracle::rank_rational(m), 3u);
  EXPECT_EQ(rank_rational(to_sparse(m)), 3u);
  oracle::Matrix full{{big, 1, 0}, {1, big, 1}, {0, 1, big}};
  EXPECT_EQ(rank_rational(to_sparse(full)), 3u);
}
