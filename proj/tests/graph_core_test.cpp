#include <algorithm>
#include <set>
#include <stdexcept>

#include "accdom/generators.hpp"
#include "accdom/graph.hpp"
#include "accdom/graph_io.hpp"
#include "doctest.h"

using namespace accdom;

namespace {

Graph path(int n) { return build_standard(StandardFamily::path, n); }

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(10);
  CHECK(s.empty());
  s = s.with(3).with(7).with(3);
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK(!s.contains(4));
  CHECK(s.members() == std::vector<int>{3, 7});
  CHECK(s.to_string() == "{3,7}");
  CHECK(s.without(3).members() == std::vector<int>{7});

  VertexSet t = VertexSet::of(10, {0, 3});
  CHECK(s.intersect(t).members() == std::vector<int>{3});
  CHECK(s.union_with(t).count() == 3);
  CHECK(s.difference(t).members() == std::vector<int>{7});
  CHECK(t.subset_of(s.union_with(t)));
  CHECK(s.intersects(t));
  CHECK(VertexSet(10).complement() == VertexSet::full(10));
  CHECK(VertexSet::full(10).count() == 10);

  CHECK_THROWS_AS(VertexSet(kMaxSubsetVertices + 1), std::invalid_argument);
  CHECK_THROWS_AS(s.with(10), std::out_of_range);
  CHECK_THROWS_AS(s.union_with(VertexSet(9)), std::invalid_argument);
  CHECK(VertexSet(64).complement().count() == 64);
}

TEST_CASE("vertex labels render") {
  CHECK(VertexLabel::plain(3).to_string() == "3");
  CHECK(VertexLabel::base_copy(2).to_string() == "(2,0)");
  CHECK(VertexLabel::pendant(0).to_string() == "(0,1)");
  CHECK(VertexLabel::member(1, 2).to_string() == "(1,x2)");
  CHECK(VertexLabel::block(2, {0, 1}).to_string() == "(2,{0,1})");
  CHECK(VertexLabel::edge_end(1, 4, 1).to_string() == "(1,e1-4)");
}

TEST_CASE("graph construction and validation") {
  Graph g(4, {{2, 0}, {0, 1}, {1, 2}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.neighbors(2) == std::vector<int>{0, 1, 3});
  CHECK(g.degree(2) == 3);
  CHECK(g.adjacent(0, 2));
  CHECK(!g.adjacent(0, 3));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{
                         {0, 1}, {0, 2}, {1, 2}, {2, 3}});

  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {}, {VertexLabel::plain(0)}),
                  std::invalid_argument);
}

TEST_CASE("neighborhood helpers") {
  Graph p4 = path(4);
  CHECK(closed_neighborhood(p4, 1).members() == std::vector<int>{0, 1, 2});

  CHECK(private_neighborhood(p4, 1, VertexSet::of(4, {1, 2})).members() ==
        std::vector<int>{0});
  Graph k3 = build_standard(StandardFamily::complete, 3);
  CHECK(private_neighborhood(k3, 0, VertexSet::of(3, {0, 1})).empty());
  CHECK_THROWS_AS(private_neighborhood(p4, 0, VertexSet::of(4, {1, 2})),
                  std::invalid_argument);

  LeafSupport ls = leaf_and_support_sets(p4);
  CHECK(ls.leaves.members() == std::vector<int>{0, 3});
  CHECK(ls.supports.members() == std::vector<int>{1, 2});
  LeafSupport k2 = leaf_and_support_sets(path(2));
  CHECK(k2.leaves.count() == 2);
  CHECK(k2.supports.count() == 2);

  CHECK(universal_vertices(k3).count() == 3);
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(universal_vertices(star).members() == std::vector<int>{0});
  CHECK(universal_vertices(p4).empty());
}

TEST_CASE("components and induced subgraphs") {
  Graph p7 = path(7);
  CHECK(component_count(p7) == 1);
  Subgraph rest = delete_vertices(p7, VertexSet::of(7, {1, 3, 5}));
  CHECK(rest.graph.vertex_count() == 4);
  CHECK(rest.graph.edge_count() == 0);
  CHECK(component_count(rest.graph) == 4);
  CHECK(rest.original_index == std::vector<int>{0, 2, 4, 6});

  Graph two(5, {{0, 1}, {3, 4}, {2, 3}});
  CHECK(component_count(two) == 2);
  CHECK(components(two) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});

  Subgraph sub = induced_subgraph(two, {2, 3, 4});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(sub.original_index == std::vector<int>{2, 3, 4});
}

TEST_CASE("edge list io") {
  Graph p3 = path(3);
  CHECK(write_graph(p3, GraphFormat::edge_list) == "3 2\n0 1\n1 2");
  CHECK(write_graph(Graph(1), GraphFormat::edge_list) == "1 0");

  Graph parsed = parse_graph("3 2\n1 2\n0 1\n", GraphFormat::edge_list);
  CHECK(parsed.edges() == p3.edges());
  Graph spaced = parse_graph("  3   2 \n\n0 1\r\n1 2\n\n", GraphFormat::edge_list);
  CHECK(spaced.edges() == p3.edges());

  auto message = [](const std::string& text) {
    try {
      parse_graph(text, GraphFormat::edge_list);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("") == "line 1: missing header");
  CHECK(message("2 x") == "line 1: malformed header, expected \"n m\"");
  CHECK(message("2 1 7") == "line 1: malformed header, expected \"n m\"");
  CHECK(message("2 1\n0 1 9") == "line 2: malformed edge line");
  CHECK(message("2 1\n0 2") == "line 2: endpoint out of range [0,2)");
  CHECK(message("2 1\n1 1") == "line 2: self-loop at vertex 1");
  CHECK(message("3 2\n0 1\n1 0") == "line 3: duplicate edge 1 0");
  CHECK(message("3 2\n0 1") == "line 3: expected 2 edges, got 1");
  CHECK(message("2 1\n0 1\n0 1") == "line 3: trailing content after edge list");
}

TEST_CASE("graph6 io") {
  Graph star(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(write_graph(star, GraphFormat::graph6) == "D?{");
  Graph back = parse_graph("D?{", GraphFormat::graph6);
  CHECK(back.edges() == star.edges());
  CHECK(parse_graph(">>graph6<<D?{\n", GraphFormat::graph6).edges() ==
        star.edges());

  Rng rng(11);
  for (int n : {0, 1, 2, 7, 33, 62}) {
    Graph g = random_graph(n, 0.4, rng);
    Graph round = parse_graph(write_graph(g, GraphFormat::graph6),
                              GraphFormat::graph6);
    CHECK(round.vertex_count() == n);
    CHECK(round.edges() == g.edges());
  }

  CHECK_THROWS_AS(parse_graph("", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("~??", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("D?", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("D?{?", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("B\x07", GraphFormat::graph6), ParseError);
  // n = 3 uses only 3 of the 6 data bits; a set padding bit is rejected
  CHECK_THROWS_AS(parse_graph("BC", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(write_graph(Graph(63), GraphFormat::graph6),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("graph G {}", GraphFormat::dot),
                  std::invalid_argument);
}

TEST_CASE("dot output") {
  Graph p3 = path(3);
  CHECK(write_graph(p3, GraphFormat::dot) ==
        "graph G {\n"
        "  0 [label=\"0\"];\n"
        "  1 [label=\"1\"];\n"
        "  2 [label=\"2\"];\n"
        "  0 -- 1;\n"
        "  1 -- 2;\n"
        "}");
}

TEST_CASE("standard families") {
  Graph c5 = build_standard(StandardFamily::cycle, 5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  Graph k23 = build_standard(StandardFamily::complete_bipartite, 2, 3);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(!k23.adjacent(0, 1));
  CHECK(k23.adjacent(0, 2));
  CHECK(build_standard(StandardFamily::complete, 4).edge_count() == 6);
  CHECK(path(1).edge_count() == 0);
  CHECK_THROWS_AS(build_standard(StandardFamily::cycle, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_standard(StandardFamily::path, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_standard(StandardFamily::complete_bipartite, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("tree enumeration") {
  long long expected[] = {0, 1, 1, 3, 16, 125};
  for (int n = 1; n <= 5; ++n) {
    TreeEnumerator trees(n);
    long long count = 0;
    std::set<std::vector<std::pair<int, int>>> distinct;
    while (auto t = trees.next()) {
      ++count;
      CHECK(t->vertex_count() == n);
      CHECK(t->edge_count() == n - 1);
      CHECK(component_count(*t) == 1);
      distinct.insert(t->edges());
    }
    CHECK(count == expected[n]);
    if (n <= 4) CHECK(static_cast<long long>(distinct.size()) == count);
  }
  CHECK_THROWS_AS(TreeEnumerator(0), std::invalid_argument);
  CHECK_THROWS_AS(TreeEnumerator(kMaxEnumerationVertices + 1),
                  std::invalid_argument);
}

TEST_CASE("exhaustive graph enumeration") {
  CHECK(all_graphs(3, false).size() == 8);
  CHECK(all_graphs(4, true).size() == 38);
  long long connected[] = {0, 1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(all_graphs(n, true).size()) == connected[n]);
  CHECK_THROWS_AS(all_graphs(8, false), std::invalid_argument);
}

TEST_CASE("random graphs are deterministic and sane") {
  Graph a = random_graph(12, 0.35, 99);
  Graph b = random_graph(12, 0.35, 99);
  CHECK(a.edges() == b.edges());
  CHECK(random_graph(9, 0.0, 1).edge_count() == 0);
  CHECK(random_graph(9, 1.0, 1).edge_count() == 36);

  Rng rng(5);
  long long degree_sum = 0;
  Graph g = random_graph(20, 0.3, rng);
  for (int v = 0; v < 20; ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * g.edge_count());

  Rng tr(7);
  for (int n : {1, 2, 3, 9, 40}) {
    Graph t = random_tree(n, tr);
    CHECK(t.vertex_count() == n);
    CHECK(t.edge_count() == n - 1);
    CHECK(component_count(t) == 1);
  }
  Rng cr(8);
  Graph c = random_connected_graph(15, 0.2, cr);
  CHECK(component_count(c) == 1);
  CHECK(c.edge_count() >= 14);
}

TEST_CASE("distinct trees come out of distinct sequences") {
  // the sequence decode is a bijection, so sequence count equals tree count
  TreeEnumerator trees(4);
  std::set<std::string> seen;
  while (auto t = trees.next())
    seen.insert(write_graph(*t, GraphFormat::graph6));
  CHECK(seen.size() == 16);
}
