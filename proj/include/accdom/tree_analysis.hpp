#pragma once

#include <optional>

#include "accdom/graph.hpp"

namespace accdom {

bool is_tree(const Graph& g);

// Is G = F corona K1 for some connected F? Degree counting decides this:
// K2 qualifies, and otherwise G qualifies iff n is even, exactly n/2
// vertices are leaves, and every non-leaf has exactly one leaf neighbor.
// Requires a connected nonempty input.
bool is_corona_graph(const Graph& g);

// For trees with n >= 2 the minimum dominating and minimum accurate
// dominating sizes agree exactly when the tree is not a pendant corona.
// Pure structure check, no search.
bool tree_gamma_a_equals_gamma(const Graph& t);

// Minimum dominating set of a tree by dynamic programming over a rooted
// orientation. Linear, deterministic.
VertexSet tree_minimum_dominating_set(const Graph& t);

// A minimum dominating set containing every support vertex such that each
// member outside the supports either has no neighbor in the set or keeps at
// least two private neighbors. Obtained from the tree dynamic program by two
// exchange rules: a leaf is traded for its support, and a non-support whose
// only private neighbor is u is traded for u. Trees with n >= 3.
VertexSet support_respecting_gamma_set(const Graph& t);

enum class WitnessMode { brute_force, constructive };

struct TreeWitness {
  VertexSet dominating_set;
  int components_after_removal = 0;
  WitnessMode mode = WitnessMode::brute_force;
};

// A minimum dominating set D with strictly more than |D| components left
// after deleting D. Exists exactly for non-corona trees (n >= 2); returns
// nullopt otherwise. brute_force scans the minimum dominating sets in
// ascending bitmask order; constructive splits the tree at a heavy support
// or at an auxiliary pendant and recurses, never solving exhaustively.
std::optional<TreeWitness> find_witness_partition(const Graph& t,
                                                  WitnessMode mode);

}  // namespace accdom
