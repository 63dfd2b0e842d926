#include "accdom/dom_solver.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace accdom {

int solver_cap() {
  static const int cap = [] {
    int c = kMaxSubsetVertices;
    if (const char* env = std::getenv("ACCDOM_SOLVER_CAP")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 1)
        c = static_cast<int>(std::min<long>(v, kMaxSubsetVertices));
    }
    return c;
  }();
  return cap;
}

namespace {

void check_solver_input(const Graph& g) {
  if (g.vertex_count() > solver_cap())
    throw std::invalid_argument("graph has " +
                                std::to_string(g.vertex_count()) +
                                " vertices, solver cap is " +
                                std::to_string(solver_cap()));
}

std::vector<std::uint64_t> closed_masks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> nb(n);
  for (int v = 0; v < n; ++v) {
    std::uint64_t m = 1ULL << v;
    for (int u : g.neighbors(v)) m |= 1ULL << u;
    nb[v] = m;
  }
  return nb;
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~0ULL : (1ULL << n) - 1;
}

struct Search {
  const std::vector<std::uint64_t>& nb;
  std::uint64_t all;
  std::uint64_t allowed;
  int best_size;            // to beat strictly
  std::uint64_t best_set = 0;
  bool found = false;
  bool stop_at_first = false;  // for decision queries

  // Sum of a greedy cover: repeatedly take the allowed vertex covering the
  // most undominated ones (lowest index on ties). Used to seed best_size.
  void seed_greedy() {
    std::uint64_t dominated = 0, chosen = 0;
    int size = 0;
    while (dominated != all) {
      int pick = -1, pick_cov = 0;
      for (std::uint64_t c = allowed; c; c &= c - 1) {
        int u = std::countr_zero(c);
        int cov = std::popcount(nb[u] & ~dominated);
        if (cov > pick_cov) {
          pick_cov = cov;
          pick = u;
        }
      }
      if (pick == -1) return;  // infeasible; caller already checked
      dominated |= nb[pick];
      chosen |= 1ULL << pick;
      ++size;
    }
    best_size = size;
    best_set = chosen;
    found = true;
  }

  void dfs(std::uint64_t dominated, std::uint64_t chosen, int size,
           std::uint64_t banned) {
    if (dominated == all) {
      best_size = size;
      best_set = chosen;
      found = true;
      return;
    }
    if (size + 1 >= best_size) return;
    std::uint64_t undom = all & ~dominated;
    std::uint64_t usable = allowed & ~banned;

    // bound: every new vertex covers at most max_cov undominated ones
    int max_cov = 0;
    for (std::uint64_t c = usable; c; c &= c - 1) {
      int u = std::countr_zero(c);
      int cov = std::popcount(nb[u] & undom);
      if (cov > max_cov) max_cov = cov;
    }
    if (max_cov == 0) return;
    int need = (std::popcount(undom) + max_cov - 1) / max_cov;
    if (size + need >= best_size) return;

    int v = std::countr_zero(undom);
    std::uint64_t cands = nb[v] & usable;
    // every dominating set in this branch contains some candidate; explore
    // each choice once by banning earlier candidates in later branches
    std::uint64_t tried = 0;
    for (std::uint64_t c = cands; c; c &= c - 1) {
      int u = std::countr_zero(c);
      dfs(dominated | nb[u], chosen | (1ULL << u), size + 1, banned | tried);
      if (stop_at_first && found) return;
      if (size + 1 >= best_size) return;
      tried |= 1ULL << u;
    }
  }
};

// Is there a dominating set D' with D' subset of allowed and |D'| <= limit?
bool exists_dominating_within(const std::vector<std::uint64_t>& nb,
                              std::uint64_t all, std::uint64_t allowed,
                              int limit) {
  if (limit < 0) return false;
  for (std::uint64_t rest = all; rest; rest &= rest - 1)
    if ((nb[std::countr_zero(rest)] & allowed) == 0) return false;
  if (all == 0) return true;  // empty set dominates the empty graph
  Search s{nb, all, allowed, limit + 1};
  s.stop_at_first = true;
  s.dfs(0, 0, 0, 0);
  return s.found;
}

// Combinations of k set bits drawn from `allowed`, visited in ascending
// order of the full bitmask value (colex order on the index tuples).
struct CombinationScan {
  std::vector<int> pool;  // ascending member list of allowed
  std::vector<int> idx;   // positions into pool
  bool first = true;
  bool done = false;

  CombinationScan(std::uint64_t allowed, int k) {
    for (std::uint64_t b = allowed; b; b &= b - 1)
      pool.push_back(std::countr_zero(b));
    if (k > static_cast<int>(pool.size())) {
      done = true;
      return;
    }
    idx.resize(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
  }

  std::optional<std::uint64_t> next() {
    if (done) return std::nullopt;
    if (!first) {
      int k = static_cast<int>(idx.size());
      if (k == 0) {
        done = true;
        return std::nullopt;
      }
      int i = 0;
      while (i < k) {
        int limit = (i + 1 < k) ? idx[i + 1] : static_cast<int>(pool.size());
        if (idx[i] + 1 < limit) break;
        ++i;
      }
      if (i == k) {
        done = true;
        return std::nullopt;
      }
      ++idx[i];
      for (int j = 0; j < i; ++j) idx[j] = j;
    }
    first = false;
    std::uint64_t mask = 0;
    for (int i : idx) mask |= 1ULL << pool[i];
    return mask;
  }
};

bool mask_dominates(const std::vector<std::uint64_t>& nb, std::uint64_t all,
                    std::uint64_t d) {
  std::uint64_t covered = 0;
  for (std::uint64_t b = d; b; b &= b - 1) covered |= nb[std::countr_zero(b)];
  return (covered & all) == all;
}

bool mask_is_accurate(const Graph& g, const std::vector<std::uint64_t>& nb,
                      std::uint64_t all, std::uint64_t d) {
  if (!mask_dominates(nb, all, d)) return false;
  int n = g.vertex_count();
  int k = std::popcount(d);
  std::uint64_t rest = all & ~d;
  if (n - k < k) return true;  // complement too small to field |D| vertices
  return !exists_dominating_within(nb, all, rest, k);
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
  check_solver_input(g);
  if (d.host_size() != g.vertex_count())
    throw std::invalid_argument("set host does not match graph");
  auto nb = closed_masks(g);
  return mask_dominates(nb, full_mask(g.vertex_count()), d.bits());
}

std::optional<DominationResult> gamma(const Graph& g,
                                      const VertexSet& allowed) {
  check_solver_input(g);
  int n = g.vertex_count();
  if (allowed.host_size() != n)
    throw std::invalid_argument("allowed-set host does not match graph");
  auto nb = closed_masks(g);
  std::uint64_t all = full_mask(n);
  for (int v = 0; v < n; ++v)
    if ((nb[v] & allowed.bits()) == 0) return std::nullopt;
  if (n == 0) return DominationResult{0, VertexSet(0), true};

  Search s{nb, all, allowed.bits(), n + 1};
  s.seed_greedy();
  s.dfs(0, 0, 0, 0);
  return DominationResult{s.best_size,
                          VertexSet::from_bits(n, s.best_set), true};
}

std::optional<DominationResult> gamma(const Graph& g) {
  return gamma(g, VertexSet::full(g.vertex_count()));
}

std::vector<VertexSet> min_dominating_sets(const Graph& g) {
  auto base = gamma(g);
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  if (!base) return out;  // cannot happen with allowed = V, kept for shape
  auto nb = closed_masks(g);
  std::uint64_t all = full_mask(n);
  CombinationScan scan(all, base->value);
  while (auto mask = scan.next())
    if (mask_dominates(nb, all, *mask))
      out.push_back(VertexSet::from_bits(n, *mask));
  return out;
}

bool is_accurate_dominating(const Graph& g, const VertexSet& d) {
  check_solver_input(g);
  if (d.host_size() != g.vertex_count())
    throw std::invalid_argument("set host does not match graph");
  auto nb = closed_masks(g);
  return mask_is_accurate(g, nb, full_mask(g.vertex_count()), d.bits());
}

DominationResult gamma_a(const Graph& g) {
  check_solver_input(g);
  int n = g.vertex_count();
  if (n == 0)
    throw std::invalid_argument(
        "accurate domination is undefined for the empty graph (the empty "
        "set dominates it from within its own complement)");
  auto nb = closed_masks(g);
  std::uint64_t all = full_mask(n);
  int start = gamma(g)->value;
  for (int k = start; k <= n; ++k) {
    CombinationScan scan(all, k);
    while (auto mask = scan.next())
      if (mask_is_accurate(g, nb, all, *mask))
        return DominationResult{k, VertexSet::from_bits(n, *mask), true};
  }
  throw std::logic_error("no accurate dominating set found");  // unreachable
}

std::vector<VertexSet> min_accurate_dominating_sets(const Graph& g) {
  DominationResult best = gamma_a(g);
  auto nb = closed_masks(g);
  int n = g.vertex_count();
  std::uint64_t all = full_mask(n);
  std::vector<VertexSet> out;
  CombinationScan scan(all, best.value);
  while (auto mask = scan.next())
    if (mask_is_accurate(g, nb, all, *mask))
      out.push_back(VertexSet::from_bits(n, *mask));
  return out;
}

GammaEqualityAnalysis analyze_gamma_equality(const Graph& g) {
  check_solver_input(g);
  if (g.vertex_count() == 0)
    throw std::invalid_argument("empty graph");
  GammaEqualityAnalysis out;
  out.equality = gamma_a(g).value == gamma(g)->value;
  auto sets = min_dominating_sets(g);
  for (const auto& d : sets) {
    bool hits_all = true;
    for (const auto& other : sets)
      if (!d.intersects(other)) {
        hits_all = false;
        break;
      }
    if (hits_all) {
      out.hitting_set = d;
      break;
    }
  }
  return out;
}

}  // namespace accdom
