#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glab/glab.hpp"

namespace {

using namespace glab;

enum Exit { kOk = 0, kDiscrepancy = 1, kUsage = 2 };

struct GraphSource {
  std::string input;  // file path, "-" for stdin
  std::string named;
  std::string graph6;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input,-i", input, "edge-list or graph6 file ('-' for stdin)");
    cmd->add_option("--named", named, "a named graph: K<n>, C<n>, P<n>, <m>K2, pentagon-chord, bowtie, 2K2*2K2");
    cmd->add_option("--graph6", graph6, "a single graph6 string");
  }

  bool given() const { return !input.empty() || !named.empty() || !graph6.empty(); }

  std::vector<Graph> load() const {
    if (!named.empty()) return {glab::named(named)};
    if (!graph6.empty()) return {from_graph6(graph6)};
    if (input.empty() || input == "-") return read_graphs(std::cin);
    std::ifstream f(input);
    if (!f) throw usage_error("cannot open " + input);
    return read_graphs(f);
  }
};

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& names, std::vector<FieldSpec> fallback) {
  if (names.empty()) return fallback;
  std::vector<FieldSpec> out;
  for (const auto& n : names) {
    FieldSpec f = FieldSpec::parse(n);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("GLAB_SEED");
  if (!s || !*s) return kDefaultSeed;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw usage_error(std::string("GLAB_SEED must be an unsigned integer, got '") + s + "'");
  }
}

const char* yn(bool b) { return b ? "y" : "-"; }

void print_table(const std::vector<AnalysisReport>& rows, std::ostream& out) {
  if (rows.empty()) return;
  out << std::left << std::setw(14) << "graph6" << std::right << std::setw(4) << "n" << std::setw(5) << "m"
      << std::setw(6) << "alpha" << std::setw(6) << "chi" << std::setw(4) << "wc" << std::setw(4) << "w2"
      << std::setw(6) << "semi" << std::setw(7) << "euler" << std::setw(7) << "planar" << std::setw(6) << "pp";
  for (const auto& f : rows.front().fields) out << std::setw(10) << ("CM/" + f.field.name()) << std::setw(9) << ("G/" + f.field.name());
  out << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(14) << r.graph6 << std::right << std::setw(4) << r.n << std::setw(5) << r.edges
        << std::setw(6) << r.alpha << std::setw(6) << r.reduced_euler_char << std::setw(4) << yn(r.well_covered)
        << std::setw(4) << (r.w2 ? yn(*r.w2) : "n/a") << std::setw(6) << yn(r.semi_eulerian) << std::setw(7)
        << yn(r.eulerian) << std::setw(7) << yn(r.planar) << std::setw(6) << yn(r.pseudo_planar.verdict);
    for (const auto& f : r.fields) out << std::setw(10) << yn(f.cohen_macaulay) << std::setw(9) << yn(f.gorenstein);
    if (r.has_isolated_vertices()) out << "  (isolated vertices)";
    out << '\n';
  }
}

void print_summary_table(const SweepReport& rep, std::ostream& out) {
  out << "check: " << (rep.check.empty() ? "none" : rep.check) << "\n";
  out << "graphs checked: " << rep.graphs_checked << "\n";
  for (auto [n, c] : rep.counts_by_order) out << "  n=" << n << ": " << c << "\n";
  if (rep.in_scope) out << "in scope: " << rep.in_scope << "\n";
  for (const auto& [k, c] : rep.counts) out << k << ": " << c << "\n";
  for (const auto& s : rep.survivors) out << "survivor: " << s << "\n";
  for (const auto& d : rep.notes) out << "note [" << d.check << "] " << d.graph6 << ": " << d.detail << "\n";
  out << "discrepancies: " << rep.discrepancies.size() << "\n";
  for (const auto& d : rep.discrepancies) out << "  [" << d.check << "] " << d.graph6 << ": " << d.detail << "\n";
}

void emit_graph(const Graph& g, const std::string& format, std::ostream& out) {
  if (format == "graph6") {
    out << to_graph6(g) << '\n';
  } else if (format == "edges") {
    out << format_edge_list(g);
  } else {
    throw usage_error("format '" + format + "' is not available here");
  }
}

int run_analyze(const GraphSource& src, const std::vector<FieldSpec>& fields, const std::string& format) {
  auto graphs = src.load();
  std::vector<AnalysisReport> rows;
  for (const auto& g : graphs) {
    rows.push_back(analyze(g, fields));
    if (rows.back().has_isolated_vertices()) {
      std::cerr << "warning: " << rows.back().graph6 << " has isolated vertices; Gorenstein is decided on the core\n";
    }
  }
  if (format == "table") {
    print_table(rows, std::cout);
  } else if (format == "jsonl") {
    for (const auto& r : rows) std::cout << to_json(r).dump() << '\n';
  } else if (format == "json") {
    if (rows.size() == 1) {
      std::cout << to_json(rows.front()).dump(2) << '\n';
    } else {
      Json all = Json::array();
      for (const auto& r : rows) all.push_back(to_json(r));
      std::cout << all.dump(2) << '\n';
    }
  } else {
    for (const auto& g : graphs) emit_graph(g, format, std::cout);
  }
  return kOk;
}

struct SweepOptions {
  std::size_t n = 0;
  std::vector<std::string> filters;
  std::string check;
  std::size_t jobs = 1;
};

int run_sweep(const SweepOptions& opt, const GraphSource& src, const std::vector<FieldSpec>& fields,
              const std::string& format) {
  FilterSet filter;
  for (const auto& f : opt.filters) filter.add(FilterSet::parse(f));
  const bool external = src.given();
  const bool enumerates = opt.check.empty() || opt.check == "main-theorem";
  if (enumerates && !external && opt.n == 0) throw usage_error("sweep needs --n or a graph6 input");
  if (!external && opt.n > kMaxEnumerationOrder) {
    throw usage_error("--n above 9 needs an external graph6 stream via --input");
  }
  auto source_graphs = [&] {
    if (!external) return graphs_up_to(opt.n, filter);
    std::vector<Graph> out;
    for (auto& g : src.load())
      if (filter.accepts(g)) out.push_back(std::move(g));
    return out;
  };

  SweepReport rep;
  if (opt.check.empty() || opt.check == "main-theorem") {
    auto graphs = source_graphs();
    if (opt.check.empty()) {
      if (format == "graph6" || format == "edges") {
        for (const auto& g : graphs) emit_graph(g, format, std::cout);
        return kOk;
      }
      rep.check = "";
      rep.filters = filter.names();
      for (const auto& g : graphs) {
        ++rep.graphs_checked;
        ++rep.counts_by_order[g.order()];
        rep.n_max = std::max(rep.n_max, g.order());
      }
      if (format == "jsonl") rep.rows = parallel_map(graphs, [&](const Graph& g) { return analyze(g, fields); }, opt.jobs);
    } else {
      rep = verify_main_theorem(graphs, fields, opt.jobs);
      rep.filters = filter.names();
      if (!external) rep.n_max = opt.n;
    }
  } else if (opt.check == "a4") {
    rep = verify_a4();
  } else if (opt.check == "classifications") {
    rep = verify_classifications(opt.n == 0 ? 8 : opt.n, fields, opt.jobs);
  } else if (opt.check == "lemmas") {
    rep = verify_lemma_suite(opt.n == 0 ? 7 : opt.n, seed_from_env(), fields, opt.jobs);
  } else {
    throw usage_error("unknown check '" + opt.check + "'");
  }

  if (format == "table") {
    if (!rep.rows.empty()) print_table(rep.rows, std::cout);
    print_summary_table(rep, std::cout);
  } else if (format == "jsonl") {
    for (const auto& r : rep.rows) std::cout << to_json(r).dump() << '\n';
    std::cout << Json{{"summary", to_json(rep)}}.dump() << '\n';
  } else if (format == "json") {
    std::cout << to_json(rep).dump(2) << '\n';
  } else if (format == "graph6" && !rep.survivors.empty()) {
    for (const auto& s : rep.survivors) std::cout << s << '\n';
  } else {
    throw usage_error("format '" + format + "' is not available for this check");
  }
  return rep.ok() ? kOk : kDiscrepancy;
}

int run_homology(const std::string& complex_path, const GraphSource& src, const std::vector<FieldSpec>& fields) {
  SimplicialComplex c = SimplicialComplex::void_complex(0);
  if (!complex_path.empty()) {
    if (complex_path == "-") {
      c = parse_complex(std::cin);
    } else {
      std::ifstream f(complex_path);
      if (!f) throw usage_error("cannot open " + complex_path);
      c = parse_complex(f);
    }
  } else {
    auto graphs = src.load();
    if (graphs.size() != 1) throw usage_error("homology takes exactly one graph");
    c = independence_complex(graphs.front());
  }
  if (c.is_void()) throw usage_error("the void complex has no reduced homology here");
  if (fields.size() == 1) {
    std::cout << to_json(reduced_homology_dims(c, fields.front())).dump() << '\n';
  } else {
    Json all = Json::array();
    for (const auto& f : fields) all.push_back(to_json(reduced_homology_dims(c, f)));
    std::cout << all.dump() << '\n';
  }
  return kOk;
}

int run_construct(const std::string& what, const std::string& base, std::size_t steps, std::size_t vertex,
                  const std::string& format) {
  Graph g = what == "pinter" ? pinter_chain(named(base), steps, vertex) : named(what);
  emit_graph(g, format, std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein and Eulerian independence complexes of small graphs"};
  app.require_subcommand(1);

  std::vector<std::string> field_names;
  std::string format;

  GraphSource analyze_src;
  auto* analyze_cmd = app.add_subcommand("analyze", "report every predicate for each input graph");
  analyze_src.add_to(analyze_cmd);
  analyze_cmd->add_option("--field", field_names, "coefficient field: q, 2, 3 or any prime (repeatable)");
  analyze_cmd->add_option("--format", format, "json, jsonl, table, graph6 or edges")
      ->check(CLI::IsMember({"json", "jsonl", "table", "graph6", "edges"}));

  SweepOptions sweep;
  GraphSource sweep_src;
  auto* sweep_cmd = app.add_subcommand("sweep", "enumerate small graphs and run a verification check");
  sweep_cmd->add_option("--n", sweep.n, "largest vertex count (at most 9 without --input)");
  sweep_cmd->add_option("--filter", sweep.filters, "connected, no-isolated, planar, triangle-free, bipartite, chordal")
      ->check(CLI::IsMember({"connected", "no-isolated", "planar", "triangle-free", "bipartite", "chordal"}));
  sweep_cmd->add_option("--check", sweep.check, "main-theorem, a4, classifications or lemmas")
      ->check(CLI::IsMember({"main-theorem", "a4", "classifications", "lemmas"}));
  sweep_cmd->add_option("--field", field_names, "coefficient field (repeatable)");
  sweep_cmd->add_option("--format", format, "json, jsonl, table, graph6 or edges")
      ->check(CLI::IsMember({"json", "jsonl", "table", "graph6", "edges"}));
  sweep_cmd->add_option("--jobs,-j", sweep.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--input,-i", sweep_src.input, "graph6 stream to sweep instead of the built-in enumeration");

  std::string complex_path;
  GraphSource homology_src;
  auto* homology_cmd = app.add_subcommand("homology", "reduced homology of a complex or of Δ(G)");
  homology_cmd->add_option("--complex", complex_path, "complex file ('-' for stdin)");
  homology_src.add_to(homology_cmd);
  homology_cmd->add_option("--field", field_names, "coefficient field (repeatable, default q)");

  std::string what, base = "K2";
  std::size_t steps = 1, vertex = 0;
  auto* construct_cmd = app.add_subcommand("construct", "emit a named graph or an iterated extension");
  construct_cmd->add_option("what", what, "a graph name, or 'pinter'")->required();
  construct_cmd->add_option("--base", base, "base graph for 'pinter'");
  construct_cmd->add_option("--steps", steps, "number of extensions for 'pinter'");
  construct_cmd->add_option("--vertex", vertex, "vertex x the extension is applied at");
  construct_cmd->add_option("--format", format, "edges or graph6")->check(CLI::IsMember({"edges", "graph6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) {
      return run_analyze(analyze_src, parse_fields(field_names, default_fields()), format.empty() ? "json" : format);
    }
    if (*sweep_cmd) {
      return run_sweep(sweep, sweep_src, parse_fields(field_names, default_fields()), format.empty() ? "json" : format);
    }
    if (*homology_cmd) {
      return run_homology(complex_path, homology_src, parse_fields(field_names, {FieldSpec::rationals()}));
    }
    if (*construct_cmd) return run_construct(what, base, steps, vertex, format.empty() ? "edges" : format);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const unsupported_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
