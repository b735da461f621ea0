// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "glab/glab.hpp"
#include "oracles.hpp"

using namespace glab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string first_discrepancy(const SweepReport& rep) {
  if (rep.discrepancies.empty()) return "";
  const auto& d = rep.discrepancies.front();
  return d.check + " " + d.graph6 + ": " + d.detail;
}

Outcome main_theorem() {
  auto rep = verify_main_theorem(8, default_fields(), jobs(), {GraphFilter::no_isolated});
  if (!rep.ok()) return fail(std::to_string(rep.discrepancies.size()) + " discrepancies, first " + first_discrepancy(rep));
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 8; ++n) expected += enumerate_graphs(n, {GraphFilter::no_isolated}).size();
  if (rep.graphs_checked != expected) return fail("graph count mismatch");
  std::ostringstream s;
  s << rep.graphs_checked << " graphs, " << rep.in_scope << " in scope, " << rep.counts["in_scope_eulerian"]
    << " Eulerian = " << rep.counts["in_scope_gorenstein"] << " Gorenstein";
  return {true, s.str()};
}

Outcome exclusion() {
  const Graph& g = two_k2_join_two_k2();
  auto r = analyze(g);
  if (!r.eulerian) return fail("not Eulerian");
  for (const auto& f : r.fields)
    if (f.gorenstein) return fail("Gorenstein over " + f.field.name());
  if (r.pseudo_planar.verdict) return fail("pseudo-planar");
  const auto& w = r.pseudo_planar.witness;
  if (!w || !w->independent_set.empty() || w->clause != PseudoPlanarClause::isomorphic_to_2k2_join_2k2)
    return fail("wrong witness");
  if (r.planar) return fail("planar");
  const auto faces = oracle::independent_sets(g);
  for (std::int64_t p : {0, 2, 3}) {
    auto h = oracle::homology(faces, p);
    if (h[0] != 1 || h[1] != 2) return fail("oracle homology mismatch");
  }
  for (const auto& f : r.fields) {
    if (f.homology.at(0) != 1 || f.homology.at(1) != 2 || f.homology.at(-1) != 0) return fail("homology over " + f.field.name());
  }
  return {true, "H0=1 H1=2, witness S=empty"};
}

Outcome link_sum() {
  std::size_t complexes = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      auto c = independence_complex(g);
      ++complexes;
      // independent recomputation from the face list
      const auto faces = oracle::independent_sets(g);
      std::int64_t sum = 0;
      for (auto f : faces) {
        std::vector<oracle::Set> lk;
        for (auto h : faces)
          if ((h & f) == f) lk.push_back(h & ~f);
        sum += oracle::reduced_euler_char(lk);
      }
      if (sum != -1 || link_euler_sum(c) != -1) return fail("graph " + to_graph6(g));
    }
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 500; ++i) {
    auto c = random_complex(rng);
    ++complexes;
    if (link_euler_sum(c) != -1) return fail("random complex " + fingerprint(c));
  }
  return {true, std::to_string(complexes) + " complexes"};
}

Outcome euler_recursion() {
  std::size_t semi = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      auto c = independence_complex(g);
      if (!is_semi_eulerian(c)) continue;
      ++semi;
      const int d = dimension(c);
      const std::int64_t chi = reduced_euler_char(c);
      bool all_zero = true, some_zero = false;
      for (Vertex v = 0; v < n; ++v) {
        const auto nv = induced_mask(g, g.adjacency(v)).graph;
        const std::int64_t chi_nv = oracle::reduced_euler_char(oracle::independent_sets(nv));
        if (chi != (d % 2 == 0 ? 1 : -1) * (1 + chi_nv)) return fail("recursion at " + to_graph6(g));
        all_zero = all_zero && chi_nv == 0;
        some_zero = some_zero || chi_nv == 0;
      }
      const bool eulerian = is_euler_complex(c);
      if (eulerian != all_zero || all_zero != some_zero) return fail("conditions disagree at " + to_graph6(g));
    }
  return {true, std::to_string(semi) + " semi-Eulerian graphs"};
}

Outcome a4() {
  auto survivors = classify_a4();
  if (survivors.size() != 2) return fail(std::to_string(survivors.size()) + " survivors");
  const Graph chord = named("pentagon-chord"), bow = named("bowtie");
  bool has_chord = false, has_bow = false;
  for (const Graph& g : survivors) {
    has_chord = has_chord || oracle::isomorphic(g, chord);
    has_bow = has_bow || oracle::isomorphic(g, bow);
  }
  if (!has_chord || !has_bow) return fail("survivors are not the expected pair");
  return {true, to_graph6(survivors[0]) + " " + to_graph6(survivors[1])};
}

Outcome classifications() {
  auto rep = verify_classifications(8, default_fields(), jobs());
  if (!rep.ok()) return fail(first_discrepancy(rep));
  std::ostringstream s;
  s << "bipartite " << rep.counts["bipartite"] << ", chordal " << rep.counts["chordal"] << ", triangle-free "
    << rep.counts["triangle-free"];
  return {true, s.str()};
}

Outcome pinter_chain_check() {
  const auto start = std::chrono::steady_clock::now();
  Graph g = pinter_extension(complete(2), 0);
  if (!is_isomorphic(g, cycle(5)) || !oracle::isomorphic(g, cycle(5))) return fail("first step is not a pentagon");
  Graph h = complete(2);
  const std::size_t orders[] = {5, 8, 11};
  for (std::size_t i = 0; i < 3; ++i) {
    h = pinter_extension(h, 0);
    if (h.order() != orders[i]) return fail("order");
    if (independence_number(h) != i + 2) return fail("alpha at step " + std::to_string(i + 1));
    for (const auto& f : default_fields())
      if (!is_gorenstein_graph(h, f)) return fail("not Gorenstein over " + f.name());
    if (!is_pseudo_planar(h).verdict) return fail("not pseudo-planar");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 60) return fail("took " + std::to_string(secs) + " s");
  return {true, "orders 5, 8, 11"};
}

Outcome homology_spot_checks() {
  for (const auto& f : default_fields()) {
    auto c5 = reduced_homology_dims(independence_complex(cycle(5)), f);
    if (c5.dims != std::map<int, std::size_t>{{-1, 0}, {0, 0}, {1, 1}}) return fail("C5 over " + f.name());
    if (!reduced_homology_dims(SimplicialComplex::simplex(5, full_mask(5)), f).acyclic()) return fail("simplex");
    if (!reduced_homology_dims(star(independence_complex(cycle(7)), 3), f).acyclic()) return fail("star cone");
    auto c4 = reduced_homology_dims(independence_complex(cycle(4)), f);
    if (c4.dims != std::map<int, std::size_t>{{-1, 0}, {0, 1}, {1, 0}}) return fail("C4 over " + f.name());
  }
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      const auto c = independence_complex(g);
      const auto faces = oracle::independent_sets(g);
      const std::int64_t chi = oracle::reduced_euler_char(faces);
      for (std::int64_t p : {2, 0}) {
        const auto f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(2);
        auto h = reduced_homology_dims(c, f);
        if (h.euler_characteristic() != chi) return fail("alternating sum at " + to_graph6(g));
        if (n <= 6 && h.dims != oracle::homology(faces, p)) return fail("oracle mismatch at " + to_graph6(g));
      }
      ++checked;
    }
  return {true, std::to_string(checked) + " complexes"};
}

Outcome semi_eulerian_and_pseudomanifold() {
  std::size_t semi = 0, gorenstein = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      const auto c = independence_complex(g);
      if (is_semi_eulerian(c) && n >= 2) {
        ++semi;
        if (!is_w2(g)) return fail("semi-Eulerian but not W2: " + to_graph6(g));
      }
      if (has_isolated_vertex(g)) continue;
      bool gor = false;
      for (const auto& f : default_fields()) gor = gor || is_gorenstein_complex(c, f);
      if (!gor) continue;
      ++gorenstein;
      if (!is_pure(c) || !is_connected_codim_one(c) || !is_pseudomanifold(c)) return fail("not a pseudomanifold: " + to_graph6(g));
    }
  return {true, std::to_string(semi) + " semi-Eulerian, " + std::to_string(gorenstein) + " Gorenstein"};
}

Outcome planarity() {
  if (is_planar(complete(5)) || is_planar(complete_bipartite(3, 3))) return fail("K5 or K33 planar");
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : all_graphs(n)) {
      if (is_planar(g) == has_kuratowski_minor(g)) return fail("oracle disagrees at " + to_graph6(g));
      ++checked;
    }
  std::size_t planar = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const Graph& g : all_graphs(n)) {
      if (!is_planar(g)) continue;
      ++planar;
      if (!is_pseudo_planar(g).verdict) return fail("planar but not pseudo-planar: " + to_graph6(g));
    }
  return {true, std::to_string(checked) + " graphs vs minor search, " + std::to_string(planar) + " planar"};
}

Outcome enumeration_counts() {
  const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  std::string got;
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::size_t c = all_graphs(n).size();
    got += (n > 1 ? "," : "") + std::to_string(c);
    if (c != expected[n]) return fail("n=" + std::to_string(n) + " gives " + std::to_string(c));
  }
  for (std::size_t n = 1; n <= 5; ++n)
    if (oracle::class_count(n) != all_graphs(n).size()) return fail("orbit count oracle at n=" + std::to_string(n));
  return {true, got};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Gorenstein iff Eulerian on pseudo-planar graphs, n <= 8", main_theorem},
      {2, "2K2*2K2 is Eulerian, not Gorenstein, not pseudo-planar", exclusion},
      {3, "link Euler characteristics sum to -1", link_sum},
      {4, "Euler characteristic recursion on semi-Eulerian complexes", euler_recursion},
      {5, "five-vertex classification has exactly two survivors", a4},
      {6, "bipartite, chordal and triangle-free classifications, n <= 8", classifications},
      {7, "three-vertex extension chain from K2", pinter_chain_check},
      {8, "homology spot checks and Euler compatibility", homology_spot_checks},
      {9, "semi-Eulerian implies W2; Gorenstein complexes are pseudomanifolds", semi_eulerian_and_pseudomanifold},
      {10, "planarity against minor search; planar implies pseudo-planar", planarity},
      {11, "enumeration counts for n = 1..8", enumeration_counts},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%s) [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
