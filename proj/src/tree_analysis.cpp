#include "accdom/tree_analysis.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "accdom/dom_solver.hpp"

namespace accdom {

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
         component_count(g) == 1;
}

bool is_corona_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (component_count(g) != 1)
    throw std::invalid_argument("corona recognition needs a connected graph");
  if (n == 2) return true;  // K1 corona K1
  if (n % 2 != 0) return false;
  int leaf_count = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) ++leaf_count;
  if (leaf_count != n / 2) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) continue;
    int leaf_neighbors = 0;
    for (int u : g.neighbors(v))
      if (g.degree(u) == 1) ++leaf_neighbors;
    if (leaf_neighbors != 1) return false;
  }
  return true;
}

namespace {

void check_tree(const Graph& t, int min_n) {
  if (!is_tree(t)) throw std::invalid_argument("input is not a tree");
  if (t.vertex_count() < min_n)
    throw std::invalid_argument("tree operation needs n >= " +
                                std::to_string(min_n));
}

constexpr int kInf = 1 << 20;

// states: 0 = in the set, 1 = out and dominated by a child, 2 = out and
// waiting for the parent
struct TreeDp {
  const Graph& t;
  std::vector<int> parent, order;  // order is root-first
  std::vector<std::array<int, 3>> dp;

  explicit TreeDp(const Graph& tree) : t(tree) {
    int n = t.vertex_count();
    parent.assign(n, -1);
    order.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int u : t.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          parent[u] = v;
          stack.push_back(u);
        }
    }
    dp.assign(n, {0, 0, 0});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      int sum_any = 0;    // children free to take any state
      int sum_01 = 0;     // children restricted to states 0/1
      int cheapest_flip = kInf;  // extra cost to force one child into 0
      bool child_in_set = false;
      for (int u : t.neighbors(v)) {
        if (u == parent[v]) continue;
        sum_any += std::min({dp[u][0], dp[u][1], dp[u][2]});
        int best01 = std::min(dp[u][0], dp[u][1]);
        sum_01 += best01;
        if (dp[u][0] <= dp[u][1]) child_in_set = true;
        cheapest_flip = std::min(cheapest_flip, dp[u][0] - best01);
      }
      dp[v][0] = 1 + sum_any;
      dp[v][2] = std::min(sum_01, kInf);
      dp[v][1] = child_in_set ? sum_01
                              : std::min(sum_01 + cheapest_flip, kInf);
    }
  }

  std::vector<char> reconstruct() const {
    int n = t.vertex_count();
    std::vector<char> in_set(n, 0);
    std::vector<int> state(n, -1);
    int root = order[0];
    state[root] = dp[root][0] <= dp[root][1] ? 0 : 1;
    for (int v : order) {
      if (state[v] == 0) in_set[v] = 1;
      // decide the children
      bool need_donor = state[v] == 1;
      int donor = -1, donor_cost = kInf;
      for (int u : t.neighbors(v)) {
        if (u == parent[v]) continue;
        if (state[v] == 0) {
          if (dp[u][0] <= dp[u][1] && dp[u][0] <= dp[u][2])
            state[u] = 0;
          else if (dp[u][1] <= dp[u][2])
            state[u] = 1;
          else
            state[u] = 2;
        } else {
          if (dp[u][0] <= dp[u][1]) {
            state[u] = 0;
            need_donor = false;
          } else {
            state[u] = 1;
            int cost = dp[u][0] - dp[u][1];
            if (cost < donor_cost) {
              donor_cost = cost;
              donor = u;
            }
          }
        }
      }
      if (need_donor) {
        if (donor == -1)
          throw std::logic_error("tree dp: no child available to dominate");
        state[donor] = 0;
      }
    }
    return in_set;
  }
};

std::vector<char> tree_gamma_ids(const Graph& t) {
  TreeDp dp(t);
  return dp.reconstruct();
}

struct LeafInfo {
  std::vector<char> is_leaf, is_support;
  std::vector<int> supports;  // sorted
};

LeafInfo leaf_info(const Graph& t) {
  int n = t.vertex_count();
  LeafInfo info;
  info.is_leaf.assign(n, 0);
  info.is_support.assign(n, 0);
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == 1) {
      info.is_leaf[v] = 1;
      info.is_support[t.neighbors(v)[0]] = 1;
    }
  for (int v = 0; v < n; ++v)
    if (info.is_support[v]) info.supports.push_back(v);
  return info;
}

// pn(v, D) for v in D: vertices of N[v] whose closed neighborhood meets D
// only in v
std::vector<int> private_neighbors(const Graph& t, const std::vector<char>& in_d,
                                   int v) {
  std::vector<int> out;
  auto only_dominator_is_v = [&](int w) {
    if (w != v && in_d[w]) return false;
    for (int u : t.neighbors(w))
      if (u != v && in_d[u]) return false;
    return true;
  };
  if (only_dominator_is_v(v)) out.push_back(v);
  for (int w : t.neighbors(v))
    if (only_dominator_is_v(w)) out.push_back(w);
  return out;
}

std::vector<char> support_respecting_ids(const Graph& t) {
  int n = t.vertex_count();
  LeafInfo info = leaf_info(t);
  std::vector<char> in_d = tree_gamma_ids(t);

  for (int guard = 0; guard <= n * n + 1; ++guard) {
    int swap_from = -1, swap_to = -1;
    // trade a leaf for its support
    for (int v = 0; v < n && swap_from == -1; ++v)
      if (info.is_leaf[v] && in_d[v]) {
        int s = t.neighbors(v)[0];
        if (in_d[s])
          throw std::logic_error("leaf and its support both in a minimum set");
        swap_from = v;
        swap_to = s;
      }
    // trade a non-support with one private neighbor for that neighbor
    for (int v = 0; v < n && swap_from == -1; ++v) {
      if (!in_d[v] || info.is_support[v]) continue;
      bool d_neighbor = false;
      for (int u : t.neighbors(v))
        if (in_d[u]) d_neighbor = true;
      if (!d_neighbor) continue;  // N(v) avoids the set: nothing to fix
      auto pn = private_neighbors(t, in_d, v);
      if (pn.size() >= 2) continue;
      if (pn.empty())
        throw std::logic_error("removable vertex in a minimum set");
      swap_from = v;
      swap_to = pn[0];
    }
    if (swap_from == -1) return in_d;
    in_d[swap_from] = 0;
    in_d[swap_to] = 1;
  }
  throw std::logic_error("support exchange did not settle");
}

std::vector<int> sorted_members(const std::vector<char>& in_d) {
  std::vector<int> out;
  for (std::size_t v = 0; v < in_d.size(); ++v)
    if (in_d[v]) out.push_back(static_cast<int>(v));
  return out;
}

// components of g with the two given vertices removed, as original-id lists
std::vector<std::vector<int>> split_components(const Graph& g, int a, int b) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != a && v != b) keep.push_back(v);
  Subgraph sub = induced_subgraph(g, keep);
  std::vector<std::vector<int>> comps = components(sub.graph);
  for (auto& comp : comps)
    for (int& v : comp) v = sub.original_index[v];
  return comps;
}

std::vector<int> constructive_witness_ids(const Graph& t);

// recurse into one side of a split; corona sides contribute their supports
std::vector<int> side_witness(const Subgraph& side) {
  std::vector<int> local;
  if (is_corona_graph(side.graph)) {
    if (side.graph.vertex_count() == 2)
      throw std::logic_error("K2 side in a witness split");
    local = leaf_info(side.graph).supports;
  } else {
    local = constructive_witness_ids(side.graph);
  }
  for (int& v : local) v = side.original_index[v];
  return local;
}

std::vector<int> merge_sides(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Witness for a non-corona tree, n >= 2, following the inductive splits.
// Postcondition: the result is a minimum dominating set containing every
// support vertex, and removing it leaves more components than its size.
std::vector<int> constructive_witness_ids(const Graph& t) {
  int n = t.vertex_count();
  LeafInfo info = leaf_info(t);
  if (n <= 4) return info.supports;  // single-support trees once coronas
                                     // (K2, P4) are excluded

  int heavy = -1;
  for (int v : info.supports)
    if (t.degree(v) >= 3) {
      heavy = v;
      break;
    }

  if (heavy != -1) {
    // split at the heavy support and its first leaf
    int vp = -1;
    for (int u : t.neighbors(heavy))
      if (info.is_leaf[u]) {
        vp = u;
        break;
      }
    auto comps = split_components(t, heavy, vp);
    int w = -1;
    for (int u : t.neighbors(heavy))
      if (u != vp) {
        w = u;
        break;
      }
    std::vector<int> branch;
    for (const auto& comp : comps)
      if (std::find(comp.begin(), comp.end(), w) != comp.end()) branch = comp;

    std::vector<int> a = merge_sides(branch, {heavy, vp});
    std::vector<int> b;
    for (int v = 0; v < n; ++v)
      if (std::find(branch.begin(), branch.end(), v) == branch.end())
        b.push_back(v);
    Subgraph s1 = induced_subgraph(t, a);
    Subgraph s2 = induced_subgraph(t, b);
    if (is_corona_graph(s1.graph)) std::swap(s1, s2);
    if (is_corona_graph(s1.graph))
      throw std::logic_error("both split sides are coronas");
    return merge_sides(side_witness(s1), side_witness(s2));
  }

  // every support has degree 2
  std::vector<char> in_d = support_respecting_ids(t);
  int v = -1;
  for (int u = 0; u < n; ++u)
    if (in_d[u] && !info.is_support[u]) {
      v = u;
      break;
    }
  if (v == -1) return sorted_members(in_d);  // the set is exactly the
                                             // supports; leaves split off

  // attach an auxiliary pendant at v and split there
  std::vector<std::pair<int, int>> edges = t.edges();
  edges.emplace_back(v, n);
  Graph r(n + 1, edges);
  int v1 = -1;
  for (int u : t.neighbors(v))
    if (!in_d[u]) {
      v1 = u;
      break;
    }
  if (v1 == -1)
    throw std::logic_error("set member with no outside neighbor");
  auto comps = split_components(r, v, n);
  std::vector<int> branch;
  for (const auto& comp : comps)
    if (std::find(comp.begin(), comp.end(), v1) != comp.end()) branch = comp;
  std::vector<int> a = merge_sides(branch, {v, n});
  std::vector<int> b;
  for (int u = 0; u <= n; ++u)
    if (std::find(branch.begin(), branch.end(), u) == branch.end())
      b.push_back(u);
  Subgraph s1 = induced_subgraph(r, a);
  Subgraph s2 = induced_subgraph(r, b);
  if (is_corona_graph(s1.graph) || is_corona_graph(s2.graph))
    throw std::logic_error("pendant split produced a corona side");
  std::vector<int> merged = merge_sides(side_witness(s1), side_witness(s2));
  if (!merged.empty() && merged.back() == n) merged.pop_back();
  return merged;
}

}  // namespace

bool tree_gamma_a_equals_gamma(const Graph& t) {
  check_tree(t, 2);
  return !is_corona_graph(t);
}

VertexSet tree_minimum_dominating_set(const Graph& t) {
  check_tree(t, 1);
  if (t.vertex_count() > kMaxSubsetVertices)
    throw std::invalid_argument("witness sets support at most 64 vertices");
  return VertexSet::of(t.vertex_count(), sorted_members(tree_gamma_ids(t)));
}

VertexSet support_respecting_gamma_set(const Graph& t) {
  check_tree(t, 3);
  if (t.vertex_count() > kMaxSubsetVertices)
    throw std::invalid_argument("witness sets support at most 64 vertices");
  return VertexSet::of(t.vertex_count(),
                       sorted_members(support_respecting_ids(t)));
}

std::optional<TreeWitness> find_witness_partition(const Graph& t,
                                                  WitnessMode mode) {
  check_tree(t, 2);
  int n = t.vertex_count();
  if (n > kMaxSubsetVertices)
    throw std::invalid_argument("witness sets support at most 64 vertices");

  if (mode == WitnessMode::brute_force) {
    for (const VertexSet& d : min_dominating_sets(t)) {
      int kappa = component_count(delete_vertices(t, d).graph);
      if (kappa > d.count())
        return TreeWitness{d, kappa, WitnessMode::brute_force};
    }
    return std::nullopt;
  }

  if (is_corona_graph(t)) return std::nullopt;
  VertexSet d = VertexSet::of(n, constructive_witness_ids(t));
  int kappa = component_count(delete_vertices(t, d).graph);
  bool dominating = true;
  for (int v = 0; v < n && dominating; ++v) {
    if (d.contains(v)) continue;
    bool covered = false;
    for (int u : t.neighbors(v)) covered = covered || d.contains(u);
    dominating = covered;
  }
  if (kappa <= d.count() || !dominating ||
      d.count() != tree_minimum_dominating_set(t).count())
    throw std::logic_error("constructive witness failed its postcondition");
  return TreeWitness{d, kappa, WitnessMode::constructive};
}

}  // namespace accdom
