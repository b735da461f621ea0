#ifndef GLAB_COMPLEX_IO_HPP
#define GLAB_COMPLEX_IO_HPP

#include <istream>
#include <sstream>
#include <string>

#include "glab/complex.hpp"
#include "glab/graph_io.hpp"

namespace glab {

// Text format: first line n, then one facet per line as space-separated
// vertex indices; "-" is the empty facet. No facet lines means the void
// complex. '#' starts a comment.
inline SimplicialComplex parse_complex(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Mask> facets;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    auto toks = detail::split_ws(line);
    if (!have_n) {
      if (toks.size() != 1) throw parse_error("first line must hold the vertex count", line_no);
      n = detail::parse_index(toks[0], line_no);
      if (n > kMaxVertices) throw parse_error("vertex count above 64", line_no);
      have_n = true;
      continue;
    }
    if (toks.size() == 1 && toks[0] == "-") {
      facets.push_back(0);
      continue;
    }
    Mask f = 0;
    for (auto tok : toks) {
      std::size_t v = detail::parse_index(tok, line_no);
      if (v >= n) throw parse_error("vertex out of range", line_no);
      f |= bit(v);
    }
    facets.push_back(f);
  }
  if (!have_n) throw parse_error("empty complex file", 0);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

inline SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

inline std::string format_complex(const SimplicialComplex& c) {
  std::string out = std::to_string(c.universe()) + "\n";
  for (Mask f : c.facet_masks()) {
    if (f == 0) {
      out += "-\n";
      continue;
    }
    bool first = true;
    for (Vertex v : vertices_of(f)) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace glab

#endif  // GLAB_COMPLEX_IO_HPP
