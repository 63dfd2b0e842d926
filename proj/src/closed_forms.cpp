#include "accdom/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "accdom/tree_analysis.hpp"

namespace accdom {

Prediction Prediction::exact(int v, std::string source) {
  return {Kind::exact, v, v, v, std::move(source)};
}

Prediction Prediction::range(int lo, int hi, std::string source) {
  if (lo > hi) throw std::invalid_argument("empty prediction range");
  return {Kind::bounds, 0, lo, hi, std::move(source)};
}

int gamma_closed(StandardFamily family, int a, int b) {
  switch (family) {
    case StandardFamily::path:
      if (a < 1) throw std::invalid_argument("path needs n >= 1");
      return (a + 2) / 3;
    case StandardFamily::cycle:
      if (a < 3) throw std::invalid_argument("cycle needs n >= 3");
      return (a + 2) / 3;
    case StandardFamily::complete:
      if (a < 1) throw std::invalid_argument("complete graph needs n >= 1");
      return 1;
    case StandardFamily::complete_bipartite:
      if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite needs both sides >= 1");
      return std::min(a, b) == 1 ? 1 : 2;
  }
  throw std::invalid_argument("unknown family");
}

int gamma_a_closed(AccurateFamily family, int a, int b) {
  switch (family) {
    case AccurateFamily::path:
      if (a < 1) throw std::invalid_argument("path needs n >= 1");
      return (a + 2) / 3 + (a == 2 || a == 4 ? 1 : 0);
    case AccurateFamily::cycle:
      if (a < 3) throw std::invalid_argument("cycle needs n >= 3");
      return a / 3 - 3 / a + 2;
    case AccurateFamily::complete:
      if (a < 1) throw std::invalid_argument("complete graph needs n >= 1");
      return a / 2 + 1;
    case AccurateFamily::complete_bipartite_equal:
      if (a < 1) throw std::invalid_argument("side size must be >= 1");
      if (b != 0 && b != a)
        throw std::invalid_argument("equal-sided case needs matching sizes");
      return a + 1;
    case AccurateFamily::complete_bipartite_unequal:
      if (a < 1 || b <= a)
        throw std::invalid_argument("unequal case needs 1 <= a < b");
      return a;
  }
  throw std::invalid_argument("unknown family");
}

FCoronaPrediction f_corona_predict(const GraphFamily& family,
                                   const std::vector<int>& gamma_of_member) {
  family.validate();
  int n = family.base.vertex_count();
  if (n < 1) throw std::invalid_argument("base graph must be nonempty");
  if (static_cast<int>(gamma_of_member.size()) != n)
    throw std::invalid_argument("need one domination value per member");
  int min_member_order = family.members[0].vertex_count();
  bool some_member_needs_two = false;
  for (int v = 0; v < n; ++v) {
    int order = family.members[v].vertex_count();
    min_member_order = std::min(min_member_order, order);
    int gv = gamma_of_member[v];
    if (gv < 1 || gv > order)
      throw std::invalid_argument("domination value for member " +
                                  std::to_string(v) + " out of range");
    if (gv > 1) some_member_needs_two = true;
  }
  FCoronaPrediction out;
  out.gamma = Prediction::exact(n, "thm3.1");
  out.gamma_a = some_member_needs_two
                    ? Prediction::exact(n, "thm3.1")
                    : Prediction::range(n + 1, n + min_member_order, "thm3.1");
  return out;
}

PCoronaPrediction p_corona_predict(const NeighborhoodPartition& partition,
                                   PCoronaBase base_kind) {
  partition.validate();
  const Graph& g = partition.base;
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("base graph must be nonempty");
  for (int v = 0; v < n; ++v)
    if (partition.blocks[v].empty())
      throw std::invalid_argument(
          "accurate prediction undefined when a vertex has no blocks "
          "(isolated base vertex " + std::to_string(v) + ")");

  bool all_single = true, all_two = true;
  int min_block_count = static_cast<int>(partition.blocks[0].size());
  int min_block_size = static_cast<int>(partition.blocks[0][0].size());
  for (int v = 0; v < n; ++v) {
    int count = static_cast<int>(partition.blocks[v].size());
    min_block_count = std::min(min_block_count, count);
    all_single = all_single && count == 1;
    all_two = all_two && count == 2;
    for (const auto& block : partition.blocks[v])
      min_block_size = std::min(min_block_size,
                                static_cast<int>(block.size()));
  }

  PCoronaPrediction out;
  out.gamma = Prediction::exact(n, "thm3.3");

  switch (base_kind) {
    case PCoronaBase::tree:
      if (!is_tree(g)) throw std::invalid_argument("base is not a tree");
      out.gamma_a = Prediction::exact(all_single ? n + 1 : n, "cor3.5");
      return out;
    case PCoronaBase::cycle: {
      bool cycle = n >= 3 && g.edge_count() == n && component_count(g) == 1;
      for (int v = 0; v < n && cycle; ++v) cycle = g.degree(v) == 2;
      if (!cycle) throw std::invalid_argument("base is not a cycle");
      int value = all_single ? n + 1 : (all_two ? n + 2 : n);
      out.gamma_a = Prediction::exact(value, "cor3.6");
      return out;
    }
    case PCoronaBase::general: {
      int cap = std::min(min_block_count, 1 + min_block_size);
      out.gamma_a = Prediction::range(n, n + cap, "thm3.3");
      return out;
    }
  }
  throw std::invalid_argument("unknown base kind");
}

S2Prediction s2_predict(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("graph must be nonempty");
  if (component_count(g) != 1)
    throw std::invalid_argument("subdivision prediction needs a connected graph");
  bool cycle = n >= 3 && g.edge_count() == n;
  for (int v = 0; v < n && cycle; ++v) cycle = g.degree(v) == 2;
  S2Prediction out;
  out.gamma = n;
  if (cycle)
    out.gamma_a = n + 2;
  else if (n == 2)
    out.gamma_a = n + 1;
  else
    out.gamma_a = n;
  return out;
}

}  // namespace accdom
