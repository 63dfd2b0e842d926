#pragma once

#include <optional>

#include "accdom/graph.hpp"

namespace accdom {

// Exact solving is exponential; refuse anything bigger than this. The
// ACCDOM_SOLVER_CAP environment variable can lower the cap (values above
// kMaxSubsetVertices are clamped down to it).
int solver_cap();

struct DominationResult {
  int value = 0;
  VertexSet witness;
  bool exhausted = true;  // search ran to completion
};

// D dominates G iff every vertex outside D has a neighbor in D.
bool is_dominating(const Graph& g, const VertexSet& d);

// Smallest dominating set drawn from `allowed` only (it still has to
// dominate every vertex of G). Returns nullopt when no subset of `allowed`
// dominates, i.e. some closed neighborhood misses `allowed` entirely.
// Branch and bound; deterministic, so the witness is reproducible.
std::optional<DominationResult> gamma(const Graph& g, const VertexSet& allowed);
std::optional<DominationResult> gamma(const Graph& g);

// All minimum dominating sets, in ascending order of their bitmask value.
std::vector<VertexSet> min_dominating_sets(const Graph& g);

// D is accurate iff it dominates and no |D|-element subset of V \ D
// dominates. With |V \ D| >= |D| that is equivalent to: the smallest
// dominating set inside V \ D (if any) is larger than |D|, because any
// smaller one could be padded up to exactly |D| elements.
bool is_accurate_dominating(const Graph& g, const VertexSet& d);

// Smallest accurate dominating set; the whole vertex set always qualifies,
// so this exists for every nonempty graph. Witness is the first accurate
// set of minimum size in ascending bitmask order.
DominationResult gamma_a(const Graph& g);

std::vector<VertexSet> min_accurate_dominating_sets(const Graph& g);

struct GammaEqualityAnalysis {
  bool equality = false;          // gamma_a(G) == gamma(G)
  std::optional<VertexSet> hitting_set;  // minimum dominating set meeting
                                         // every other one, if there is one
};

// Both fields are computed independently of each other: equality from the
// two solver values, hitting_set by scanning the minimum dominating sets.
GammaEqualityAnalysis analyze_gamma_equality(const Graph& g);

}  // namespace accdom
