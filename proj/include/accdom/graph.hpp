#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace accdom {

// Subsets of vertices are machine-word bitmasks. Everything that takes or
// returns a VertexSet therefore requires a host graph with at most
// kMaxSubsetVertices vertices. Larger graphs can still be built, parsed,
// written and fed to the product constructions.
inline constexpr int kMaxSubsetVertices = 64;

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int host_size);
  static VertexSet full(int host_size);
  static VertexSet from_bits(int host_size, std::uint64_t bits);
  static VertexSet of(int host_size, const std::vector<int>& members);

  int host_size() const { return host_; }
  std::uint64_t bits() const { return bits_; }
  int count() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const;
  std::vector<int> members() const;

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  VertexSet union_with(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet difference(const VertexSet& other) const;
  VertexSet complement() const;
  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  bool operator==(const VertexSet& other) const = default;

  std::string to_string() const;  // "{0,2,5}"

 private:
  int host_ = 0;
  std::uint64_t bits_ = 0;

  void check_vertex(int v) const;
  void check_host(const VertexSet& other) const;
};

// Labels record where a vertex came from in a product construction. A plain
// label is just the vertex id. Tagged labels attach one of: 0 (base copy in a
// corona), 1 (pendant / center), a member index of the attached graph, a
// neighborhood block, or a subdivided edge.
struct VertexLabel {
  struct Zero {
    bool operator==(const Zero&) const = default;
  };
  struct One {
    bool operator==(const One&) const = default;
  };
  struct Member {
    int index = 0;
    bool operator==(const Member&) const = default;
  };
  struct Block {
    std::vector<int> vertices;  // sorted ascending
    bool operator==(const Block&) const = default;
  };
  struct Edge {
    int u = 0, v = 0;  // u < v
    bool operator==(const Edge&) const = default;
  };
  using Tag = std::variant<std::monostate, Zero, One, Member, Block, Edge>;

  int base = 0;
  Tag tag;

  static VertexLabel plain(int id) { return {id, std::monostate{}}; }
  static VertexLabel base_copy(int v) { return {v, Zero{}}; }
  static VertexLabel pendant(int v) { return {v, One{}}; }
  static VertexLabel member(int v, int index) { return {v, Member{index}}; }
  static VertexLabel block(int v, std::vector<int> vertices) {
    return {v, Block{std::move(vertices)}};
  }
  static VertexLabel edge_end(int v, int a, int b);

  bool operator==(const VertexLabel&) const = default;
  std::string to_string() const;  // "(2,{0,1})", "(0,e0-1)", "3", ...
};

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
// Immutable once constructed; adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, const std::vector<std::pair<int, int>>& edges = {},
                 std::vector<VertexLabel> labels = {});

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  bool has_labels() const { return !labels_.empty(); }
  const VertexLabel& label(int v) const;
  const std::vector<VertexLabel>& labels() const { return labels_; }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexLabel> labels_;  // empty or size n_
};

VertexSet closed_neighborhood(const Graph& g, int v);

// Vertices whose closed neighborhood meets x but nothing else of the set:
// pn(x, s) = N[x] \ N[s \ {x}]. Requires x in s.
VertexSet private_neighborhood(const Graph& g, int x, const VertexSet& s);

struct LeafSupport {
  VertexSet leaves;
  VertexSet supports;
};
LeafSupport leaf_and_support_sets(const Graph& g);

VertexSet universal_vertices(const Graph& g);

int component_count(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

struct Subgraph {
  Graph graph;
  std::vector<int> original_index;  // new vertex i was original_index[i]
};

// G - s with surviving vertices renumbered (order preserved) and labels kept.
Subgraph delete_vertices(const Graph& g, const VertexSet& s);

// Induced subgraph on a sorted list of kept vertices. Works for any size.
Subgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

}  // namespace accdom
