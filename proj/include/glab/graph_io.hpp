#ifndef GLAB_GRAPH_IO_HPP
#define GLAB_GRAPH_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "glab/graph.hpp"

namespace glab {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string_view strip_comment(std::string_view s) {
  if (auto pos = s.find('#'); pos != std::string_view::npos) s = s.substr(0, pos);
  return trim(s);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw parse_error("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace detail

// ---- edge list ---------------------------------------------------------------
//
//   n
//   u v
//   ...
// 0-based vertices, whitespace separated, '#' starts a comment.

inline Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_n = false;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    auto toks = detail::split_ws(line);
    if (!have_n) {
      if (toks.size() != 1) throw parse_error("first line must hold the vertex count", line_no);
      std::size_t n = detail::parse_index(toks[0], line_no);
      if (n > kMaxVertices) throw parse_error("vertex count above 64", line_no);
      g = Graph(n);
      have_n = true;
      continue;
    }
    if (toks.size() != 2) throw parse_error("expected 'u v'", line_no);
    std::size_t u = detail::parse_index(toks[0], line_no), v = detail::parse_index(toks[1], line_no);
    if (u >= g.order() || v >= g.order()) throw parse_error("vertex out of range", line_no);
    if (u == v) throw parse_error("self-loop", line_no);
    g.add_edge(u, v);
  }
  if (!have_n) throw parse_error("empty edge list", 0);
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---- graph6 ------------------------------------------------------------------
//
// N(n) then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits
// per byte, most significant first, each byte offset by 63.

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.adjacency(i) >> j) & 1);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  s = detail::trim(s);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  for (char c : s) {
    if (c < 63 || c > 126) throw parse_error("invalid graph6 character", 0);
  }
  if (s.empty()) throw parse_error("empty graph6 string", 0);
  std::size_t n = 0, pos = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw parse_error("graph6 order above 64 is not supported", 0);
    n = (static_cast<std::size_t>(s[1] - 63) << 12) | (static_cast<std::size_t>(s[2] - 63) << 6) |
        static_cast<std::size_t>(s[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw parse_error("graph6 order above 64 is not supported", 0);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes) throw parse_error("graph6 length does not match order " + std::to_string(n), 0);
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    int last = s.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw parse_error("graph6 padding bits not zero", 0);
  }
  return g;
}

/// One graph per non-blank line; an optional >>graph6<< header is skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), line_no);
    }
  }
  return out;
}

/// Edge list if the first meaningful line is a bare integer, otherwise a
/// graph6 stream.
inline std::vector<Graph> read_graphs(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::istringstream lines(text);
  std::string raw;
  while (std::getline(lines, raw)) {
    auto line = detail::strip_comment(raw);
    if (line.empty()) continue;
    const bool numeric = std::all_of(line.begin(), line.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    std::istringstream again(text);
    if (numeric) return {parse_edge_list(again)};
    return read_graph6_stream(again);
  }
  throw parse_error("no graph in input", 0);
}

}  // namespace glab

#endif  // GLAB_GRAPH_IO_HPP
