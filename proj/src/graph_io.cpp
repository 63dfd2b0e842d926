#include "accdom/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace accdom {

namespace {

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line()) throw ParseError("line 1: missing header");
  std::istringstream head(line);
  long long n = -1, m = -1;
  std::string extra;
  if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0)
    fail("malformed header, expected \"n m\"");

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      ++line_no;
      fail("expected " + std::to_string(m) + " edges, got " +
           std::to_string(i));
    }
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || (es >> extra)) fail("malformed edge line");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("endpoint out of range [0," + std::to_string(n) + ")");
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    int a = static_cast<int>(std::min(u, v));
    int b = static_cast<int>(std::max(u, v));
    if (!seen.insert({a, b}).second)
      fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line()) fail("trailing content after edge list");

  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw ParseError("empty graph6 string");
  int c0 = static_cast<unsigned char>(s[0]);
  if (c0 == 126)
    throw ParseError("long-form graph6 (n > 62) not supported");
  if (c0 < 63 || c0 > 125)
    throw ParseError("invalid graph6 header byte");
  int n = c0 - 63;
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(s.size()) != 1 + nbytes)
    throw ParseError("graph6 string has wrong length for n = " +
                     std::to_string(n));

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = static_cast<unsigned char>(s[1 + bit / 6]);
      if (byte < 63 || byte > 126) throw ParseError("invalid graph6 data byte");
      int val = byte - 63;
      if ((val >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  // padding bits must be zero
  for (long long b = nbits; b < nbytes * 6; ++b) {
    int val = static_cast<unsigned char>(s[1 + b / 6]) - 63;
    if ((val >> (5 - b % 6)) & 1)
      throw ParseError("nonzero padding in graph6 string");
  }
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count());
  for (auto [u, v] : edges)
    out += "\n" + std::to_string(u) + " " + std::to_string(v);
  return out;
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    throw std::invalid_argument("graph6 short form supports at most 62 "
                                "vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, nacc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nacc == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nacc = 0;
      }
    }
  if (nacc > 0) out += static_cast<char>((acc << (6 - nacc)) + 63);
  return out;
}

std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string text =
        g.has_labels() ? g.label(v).to_string() : std::to_string(v);
    out += "  " + std::to_string(v) + " [label=\"" + text + "\"];\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}";
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list:
      return parse_edge_list(text);
    case GraphFormat::graph6:
      return parse_graph6(text);
    case GraphFormat::dot:
      throw std::invalid_argument("dot is an output-only format");
  }
  throw std::invalid_argument("unknown graph format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list:
      return write_edge_list(g);
    case GraphFormat::graph6:
      return write_graph6(g);
    case GraphFormat::dot:
      return write_dot(g);
  }
  throw std::invalid_argument("unknown graph format");
}

}  // namespace accdom
