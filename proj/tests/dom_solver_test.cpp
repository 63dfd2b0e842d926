#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "accdom/dom_solver.hpp"
#include "accdom/generators.hpp"
#include "accdom/graph.hpp"
#include "doctest.h"

using namespace accdom;

namespace {

bool naive_dominating(const Graph& g, std::uint64_t mask) {
  int n = g.vertex_count();
  std::uint64_t covered = 0;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1) {
      covered |= 1ULL << v;
      for (int u : g.neighbors(v)) covered |= 1ULL << u;
    }
  return covered == (n == 64 ? ~0ULL : (1ULL << n) - 1);
}

// smallest dominating subset of `allowed`, or -1 when none exists
int naive_gamma(const Graph& g, std::uint64_t allowed) {
  int n = g.vertex_count();
  int best = -1;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    if ((mask & ~allowed) != 0) continue;
    if (!naive_dominating(g, mask)) continue;
    int size = std::popcount(mask);
    if (best < 0 || size < best) best = size;
  }
  return best;
}

bool naive_accurate(const Graph& g, std::uint64_t mask) {
  if (!naive_dominating(g, mask)) return false;
  int n = g.vertex_count();
  int size = std::popcount(mask);
  std::uint64_t rest = ((n == 64 ? ~0ULL : (1ULL << n) - 1)) & ~mask;
  for (std::uint64_t sub = rest; ; sub = (sub - 1) & rest) {
    if (std::popcount(sub) == size && naive_dominating(g, sub)) return false;
    if (sub == 0) break;
  }
  return true;
}

std::vector<std::uint64_t> naive_min_masks(const Graph& g, bool accurate) {
  int n = g.vertex_count();
  int best = n + 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    bool ok = accurate ? naive_accurate(g, mask) : naive_dominating(g, mask);
    if (!ok) continue;
    int size = std::popcount(mask);
    if (size < best) {
      best = size;
      out.clear();
    }
    if (size == best) out.push_back(mask);
  }
  return out;
}

std::uint64_t bits_of(const VertexSet& s) {
  std::uint64_t b = 0;
  for (int v : s.members()) b |= 1ULL << v;
  return b;
}

}  // namespace

TEST_CASE("solver agrees with exhaustive search on every small graph") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n, false)) {
      auto gd = gamma(g);
      REQUIRE(gd.has_value());
      CHECK(gd->value == naive_gamma(g, (1ULL << n) - 1));
      CHECK(gd->witness.count() == gd->value);
      CHECK(is_dominating(g, gd->witness));
      CHECK(gd->exhausted);

      std::vector<std::uint64_t> mins;
      for (const VertexSet& s : min_dominating_sets(g))
        mins.push_back(bits_of(s));
      CHECK(mins == naive_min_masks(g, false));

      DominationResult ad = gamma_a(g);
      auto acc = naive_min_masks(g, true);
      CHECK(ad.value == std::popcount(acc.front()));
      CHECK(bits_of(ad.witness) == acc.front());
      std::vector<std::uint64_t> amins;
      for (const VertexSet& s : min_accurate_dominating_sets(g))
        amins.push_back(bits_of(s));
      CHECK(amins == acc);

      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask)
        CHECK(is_accurate_dominating(g, VertexSet::from_bits(n, mask)) ==
              naive_accurate(g, mask));

      GammaEqualityAnalysis eq = analyze_gamma_equality(g);
      CHECK(eq.equality == (ad.value == gd->value));
      bool hitter_exists = false;
      auto all_min = min_dominating_sets(g);
      for (const VertexSet& d : all_min) {
        bool hits_all = true;
        for (const VertexSet& other : all_min)
          if (!d.intersects(other) && !(d == other)) hits_all = false;
        if (hits_all) hitter_exists = true;
      }
      CHECK(eq.hitting_set.has_value() == hitter_exists);
      if (eq.hitting_set) {
        CHECK(eq.hitting_set->count() == gd->value);
        CHECK(is_dominating(g, *eq.hitting_set));
        for (const VertexSet& other : all_min)
          CHECK((eq.hitting_set->intersects(other) ||
                 *eq.hitting_set == other));
      }
    }
}

TEST_CASE("solver agrees with exhaustive search under restricted candidates") {
  for (const Graph& g : all_graphs(4, false)) {
    for (std::uint64_t allowed : {0ULL, 3ULL, 5ULL, 12ULL, 15ULL}) {
      auto got = gamma(g, VertexSet::from_bits(4, allowed));
      int want = naive_gamma(g, allowed);
      CHECK(got.has_value() == (want >= 0));
      if (got) {
        CHECK(got->value == want);
        CHECK(got->witness.subset_of(VertexSet::from_bits(4, allowed)));
        CHECK(is_dominating(g, got->witness));
      }
    }
  }
}

TEST_CASE("solver agrees with exhaustive search on random graphs") {
  Rng rng(2024);
  for (int n = 8; n <= 10; ++n)
    for (double p : {0.2, 0.5}) {
      Graph g = random_graph(n, p, rng);
      std::uint64_t all = (1ULL << n) - 1;
      auto gd = gamma(g);
      REQUIRE(gd.has_value());
      CHECK(gd->value == naive_gamma(g, all));
      DominationResult ad = gamma_a(g);
      auto acc = naive_min_masks(g, true);
      CHECK(ad.value == std::popcount(acc.front()));
      CHECK(bits_of(ad.witness) == acc.front());
      CHECK(is_accurate_dominating(g, ad.witness));
      CHECK(gd->value <= ad.value);
      CHECK(ad.value <= n);
    }
}

TEST_CASE("known minimum dominating sets") {
  Graph p3 = build_standard(StandardFamily::path, 3);
  auto p3_sets = min_dominating_sets(p3);
  REQUIRE(p3_sets.size() == 1);
  CHECK(p3_sets[0].members() == std::vector<int>{1});

  Graph p4 = build_standard(StandardFamily::path, 4);
  std::vector<std::uint64_t> p4_masks;
  for (const VertexSet& s : min_dominating_sets(p4))
    p4_masks.push_back(bits_of(s));
  CHECK(p4_masks == std::vector<std::uint64_t>{5, 6, 9, 10});

  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(gamma(star)->witness.members() == std::vector<int>{0});
}

TEST_CASE("known accurate domination values") {
  auto value = [](const Graph& g) { return gamma_a(g).value; };
  CHECK(value(build_standard(StandardFamily::path, 4)) == 3);
  CHECK(gamma_a(build_standard(StandardFamily::path, 4)).witness.members() ==
        std::vector<int>{0, 1, 2});
  CHECK(value(build_standard(StandardFamily::complete, 6)) == 4);
  CHECK(value(build_standard(StandardFamily::cycle, 5)) == 3);
  CHECK(value(build_standard(StandardFamily::path, 2)) == 2);
  CHECK(value(build_standard(StandardFamily::cycle, 3)) == 2);

  Graph k13(4, {{0, 1}, {0, 2}, {0, 3}});
  auto star_sets = min_accurate_dominating_sets(k13);
  REQUIRE(star_sets.size() == 1);
  CHECK(star_sets[0].members() == std::vector<int>{0});

  auto k2_sets = min_accurate_dominating_sets(
      build_standard(StandardFamily::path, 2));
  REQUIRE(k2_sets.size() == 1);
  CHECK(k2_sets[0].members() == std::vector<int>{0, 1});

  auto c3_sets = min_accurate_dominating_sets(
      build_standard(StandardFamily::cycle, 3));
  std::vector<std::uint64_t> c3_masks;
  for (const VertexSet& s : c3_sets) c3_masks.push_back(bits_of(s));
  CHECK(c3_masks == std::vector<std::uint64_t>{3, 5, 6});

  DominationResult whole = gamma_a(Graph(1));
  CHECK(whole.value == 1);
  CHECK(whole.witness.members() == std::vector<int>{0});
}

TEST_CASE("restricted candidate sets can be infeasible") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(!gamma(star, VertexSet::of(4, {1})).has_value());
  CHECK(!gamma(star, VertexSet(4)).has_value());
  CHECK(gamma(star, VertexSet::of(4, {1, 2, 3}))->value == 3);

  Graph p3 = build_standard(StandardFamily::path, 3);
  auto ends = gamma(p3, VertexSet::of(3, {0, 2}));
  REQUIRE(ends.has_value());
  CHECK(ends->value == 2);

  CHECK(gamma(Graph(0))->value == 0);
  CHECK_THROWS_AS(gamma_a(Graph(0)), std::invalid_argument);
}

TEST_CASE("witness of gamma_a is the first minimum accurate set") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(7, 0.3, rng);
    DominationResult r = gamma_a(g);
    auto sets = min_accurate_dominating_sets(g);
    REQUIRE(!sets.empty());
    CHECK(r.witness == sets[0]);
    CHECK(r.value == sets[0].count());
  }
}

TEST_CASE("equality analysis matches the hitting-set criterion everywhere") {
  // on every graph: gamma_a == gamma iff some minimum dominating set meets
  // all of them
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n, false)) {
      GammaEqualityAnalysis eq = analyze_gamma_equality(g);
      CHECK(eq.equality == eq.hitting_set.has_value());
    }
  Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(8, 0.25 + 0.05 * (i % 5), rng);
    GammaEqualityAnalysis eq = analyze_gamma_equality(g);
    CHECK(eq.equality == eq.hitting_set.has_value());
  }
}

TEST_CASE("an isolated vertex forces equality") {
  Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    Graph core = random_graph(8, 0.4, rng);
    Graph g(9, core.edges());  // vertex 8 untouched
    CHECK(gamma_a(g).value == gamma(g)->value);
  }
}

TEST_CASE("a doubled leaf on a tree forces equality") {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    Graph t = random_tree(9, rng);
    int support = -1;
    for (int v = 0; v < 9 && support < 0; ++v)
      if (t.degree(v) == 1) support = t.neighbors(v)[0];
    auto edges = t.edges();
    edges.push_back({support, 9});  // second leaf on the same support
    Graph g(10, edges);
    CHECK(gamma_a(g).value == gamma(g)->value);
  }
}

TEST_CASE("solver rejects graphs over the subset cap") {
  CHECK(solver_cap() >= 1);
  CHECK(solver_cap() <= kMaxSubsetVertices);
  Graph big(kMaxSubsetVertices + 1, {});
  CHECK_THROWS_AS(gamma(big), std::invalid_argument);
  CHECK_THROWS_AS(gamma_a(big), std::invalid_argument);
}
