#pragma once

#include <stdexcept>
#include <string>

#include "accdom/graph.hpp"

namespace accdom {

enum class GraphFormat { edge_list, graph6, dot };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// edge_list: first line "n m", then m lines "u v" with 0-based endpoints.
// graph6: standard short form, n <= 62.
// dot: output only.
Graph parse_graph(const std::string& text, GraphFormat format);

// Canonical output: edge_list lines sorted with u < v, no trailing newline;
// graph6 short form; dot includes one node line per vertex with its label.
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace accdom
