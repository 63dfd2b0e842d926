#include "accdom/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace accdom {

Graph build_standard(StandardFamily family, int a, int b) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case StandardFamily::path:
      if (a < 1) throw std::invalid_argument("path needs n >= 1");
      for (int i = 0; i + 1 < a; ++i) edges.emplace_back(i, i + 1);
      return Graph(a, edges);
    case StandardFamily::cycle:
      if (a < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 0; i + 1 < a; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, a - 1);
      return Graph(a, edges);
    case StandardFamily::complete:
      if (a < 1) throw std::invalid_argument("complete graph needs n >= 1");
      for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) edges.emplace_back(i, j);
      return Graph(a, edges);
    case StandardFamily::complete_bipartite:
      if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite needs both sides >= 1");
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
      return Graph(a + b, edges);
  }
  throw std::invalid_argument("unknown family");
}

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("zero bound");
  // Lemire's multiply-shift with rejection for exact uniformity
  std::uint64_t x = next();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  std::uint64_t lo = static_cast<std::uint64_t>(m);
  if (lo < bound) {
    std::uint64_t threshold = -bound % bound;
    while (lo < threshold) {
      x = next();
      m = static_cast<__uint128_t>(x) * bound;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

namespace {

constexpr std::uint64_t kProbOne = 1ULL << 53;

std::uint64_t prob_threshold(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("edge probability outside [0,1]");
  return static_cast<std::uint64_t>(std::llround(p * static_cast<double>(kProbOne)));
}

}  // namespace

Graph random_graph(int n, double edge_prob, Rng& rng) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::uint64_t threshold = prob_threshold(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng.next() >> 11) < threshold) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(n, edge_prob, rng);
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("tree needs n >= 1");
  if (n <= 2) return build_standard(StandardFamily::path, n);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = static_cast<int>(rng.below(n));
  return decode_pruefer(seq);
}

Graph random_connected_graph(int n, double edge_prob, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::uint64_t threshold = prob_threshold(edge_prob);
  std::vector<std::pair<int, int>> edges = tree.edges();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t draw = rng.next() >> 11;
      if (!tree.adjacent(u, v) && draw < threshold) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

Graph decode_pruefer(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n)
      throw std::invalid_argument("sequence entry out of range");
    ++deg[x];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int x : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) {
        leaf = v;
        break;
      }
    edges.emplace_back(leaf, x);
    deg[leaf] = 0;
    --deg[x];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) (a == -1 ? a : b) = v;
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

TreeEnumerator::TreeEnumerator(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationVertices)
    throw std::invalid_argument("tree enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationVertices));
  if (n >= 3) seq_.assign(n - 2, 0);
}

std::optional<Graph> TreeEnumerator::next() {
  if (done_) return std::nullopt;
  Graph out = n_ <= 2 ? build_standard(StandardFamily::path, n_)
                      : decode_pruefer(seq_);
  // odometer step over {0..n-1}^(n-2)
  done_ = true;
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (++seq_[i] < n_) {
      done_ = false;
      break;
    }
    seq_[i] = 0;
  }
  return out;
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("exhaustive graph enumeration capped at n = 7");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    Graph g(n, edges);
    if (connected_only && (n == 0 || component_count(g) != 1)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace accdom
