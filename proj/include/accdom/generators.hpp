#pragma once

#include <cstdint>
#include <optional>

#include "accdom/graph.hpp"

namespace accdom {

enum class StandardFamily { path, cycle, complete, complete_bipartite };

// path/cycle/complete take a; complete_bipartite takes a and b (class sizes,
// the a-class first). Cycles need a >= 3.
Graph build_standard(StandardFamily family, int a, int b = 0);

// Deterministic stream-cipher style generator so seeded runs reproduce
// exactly on any platform (no std::*_distribution involved).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // uniform in [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// G(n, p) with a fixed pair order; edge present iff the draw for the pair
// falls under round(p * 2^53). p = 0 and p = 1 are exact.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);
Graph random_graph(int n, double edge_prob, Rng& rng);

// uniform labeled tree from a random sequence decode
Graph random_tree(int n, Rng& rng);

// random spanning tree plus each remaining pair with probability edge_prob
Graph random_connected_graph(int n, double edge_prob, Rng& rng);

inline constexpr int kMaxEnumerationVertices = 16;

// All labeled trees on n vertices, one per sequence over {0..n-1}^(n-2),
// n^(n-2) in total, streamed in sequence order.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n);
  std::optional<Graph> next();

 private:
  int n_;
  bool done_ = false;
  std::vector<int> seq_;
};

Graph decode_pruefer(const std::vector<int>& seq);

// Every graph on n labeled vertices (2^C(n,2) of them), optionally filtered
// to connected ones. Exhaustive, so n is capped well below the solver cap.
std::vector<Graph> all_graphs(int n, bool connected_only);

}  // namespace accdom
