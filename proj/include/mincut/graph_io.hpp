#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mincut/error.hpp"
#include "mincut/graph.hpp"

namespace mincut {

enum class Format { EdgeList, Graph6, Dot };

// ---------------------------------------------------------------------------
// Edge list: "n m" on the first line, then one "u v" line per edge.

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::ParseError, "edge list must start with 'n m'");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, read " +
                                             std::to_string(i));
    }
    if (u < 0 || v < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex index");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::ParseError, "unexpected trailing token '" + trailing + "'");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

// ---------------------------------------------------------------------------
// graph6: N(n) followed by the upper triangle in column order, six bits per
// printable byte (value + 63), zero padded.

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  } else {
    throw Error(ErrorCode::TooLarge, "graph6 supports n <= 258047");
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorCode::ParseError, "invalid graph6 byte");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw Error(ErrorCode::ParseError, "graph6 sizes above 258047 are not supported");
    }
    n = (static_cast<std::size_t>(text[1] - 63) << 12) |
        (static_cast<std::size_t>(text[2] - 63) << 6) | static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Error(ErrorCode::ParseError, "graph6 body has " + std::to_string(text.size() - pos) +
                                           " bytes, expected " + std::to_string(bytes));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if (((text[pos + k / 6] - 63) >> (5 - k % 6)) & 1) {
      throw Error(ErrorCode::ParseError, "nonzero graph6 padding");
    }
  }
  return Graph::from_edge_list(n, edges);
}

// ---------------------------------------------------------------------------

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string write_graph(const Graph& g, Format format) {
  switch (format) {
    case Format::EdgeList: return to_edge_list(g);
    case Format::Graph6: return to_graph6(g) + "\n";
    case Format::Dot: return to_dot(g);
  }
  return {};
}

/// Guesses the format from content: an edge list starts with two integers.
inline Format sniff_format(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  if (text.substr(i).starts_with(">>graph6<<")) return Format::Graph6;
  std::istringstream in{std::string(text.substr(i))};
  long long a = 0;
  long long b = 0;
  if (in >> a >> b) return Format::EdgeList;
  return Format::Graph6;
}

inline Graph read_graph(std::string_view text, std::optional<Format> format = std::nullopt) {
  switch (format.value_or(sniff_format(text))) {
    case Format::EdgeList: return parse_edge_list(text);
    case Format::Graph6: return parse_graph6(text);
    case Format::Dot: break;
  }
  throw Error(ErrorCode::ParseError, "DOT is an output-only format");
}

// ---------------------------------------------------------------------------
// Family descriptors such as "cycle:5", "complete_bipartite:3,3" or
// "pruefer:0,0,1". Used by the CLI in place of an input file.

inline Graph generate(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  const std::string_view name = descriptor.substr(0, colon);
  std::vector<std::size_t> args;
  if (colon != std::string_view::npos) {
    std::string_view rest = descriptor.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error(ErrorCode::ParseError, "bad family argument '" + std::string(tok) + "'");
      }
      args.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k) {
      throw Error(ErrorCode::ParseError, "family '" + std::string(name) + "' takes " +
                                             std::to_string(k) + " argument(s)");
    }
  };
  if (name == "complete") { want(1); return complete_graph(args[0]); }
  if (name == "cycle") { want(1); return cycle_graph(args[0]); }
  if (name == "path") { want(1); return path_graph(args[0]); }
  if (name == "star") { want(1); return star_graph(args[0]); }
  if (name == "wheel") { want(1); return wheel_graph(args[0]); }
  if (name == "complete_bipartite") { want(2); return complete_bipartite_graph(args[0], args[1]); }
  if (name == "line_complete") { want(1); return line_graph(complete_graph(args[0])); }
  if (name == "prism") {
    want(1);
    return cartesian_product(complete_graph(args[0]), complete_graph(2));
  }
  if (name == "pruefer") {
    std::vector<Vertex> seq(args.begin(), args.end());
    return tree_from_pruefer(seq);
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
}

}  // namespace mincut
