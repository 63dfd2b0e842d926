#pragma once

#include <string>
#include <vector>

#include "accdom/graph.hpp"

namespace accdom {

// One attachment graph per base vertex; every member must be nonempty.
struct GraphFamily {
  Graph base;
  std::vector<Graph> members;  // members[v] is glued onto base vertex v

  void validate() const;
};

// blocks[v] partitions N(v): disjoint, nonempty, union exactly N(v).
// Normal form: each block sorted ascending, blocks ordered by least element.
// An isolated vertex gets an empty block list.
struct NeighborhoodPartition {
  Graph base;
  std::vector<std::vector<std::vector<int>>> blocks;

  void normalize();
  void validate() const;
};

// Pendant corona: one new leaf per vertex. Labels (v,0) original, (v,1) leaf.
// Layout: originals at 0..n-1, pendant of v at n+v.
Graph corona_k1(const Graph& g);

// Family corona: vertex v joined to every vertex of its own copy of
// members[v]. Labels (v,0) original, (v,xk) copy of member vertex k.
// Layout: originals at 0..n-1, copies grouped by base vertex in member order.
Graph f_corona(const GraphFamily& family);

// Partition corona: centers (v,1) plus one vertex (v,A) per block A of
// blocks[v], with (v,1)(v,A) edges and (v,A)(u,B) whenever uv is an edge,
// u in A and v in B. Layout: centers at 0..n-1, then block vertices grouped
// by base vertex in normal-form block order.
Graph p_corona(const NeighborhoodPartition& partition);

// Replace every edge uv by the path u,(u,euv),(v,euv),v. Labels: originals
// plain, subdivision vertices (u,euv)/(v,euv). Layout: originals at 0..n-1,
// then the two subdivision vertices per edge in sorted edge order.
Graph s2_subdivision(const Graph& g);

// mapping[a] is the b-vertex matched to a-vertex a. Checks that the mapping
// is a bijection preserving adjacency both ways; no isomorphism search.
bool natural_iso_check(const Graph& a, const Graph& b,
                       const std::vector<int>& mapping);

// The canonical correspondences behind two identities: a partition corona
// with whole-neighborhood blocks is the pendant corona, and one with
// singleton blocks is the double subdivision. Built by matching labels.
std::vector<int> pcorona_to_corona_k1_map(const Graph& pcor, const Graph& cor);
std::vector<int> pcorona_to_s2_map(const Graph& pcor, const Graph& s2g);

// Handy partitions of every N(v); both require no isolated vertices except
// that singleton_partition simply gives them an empty block list.
NeighborhoodPartition whole_neighborhood_partition(const Graph& g);
NeighborhoodPartition singleton_partition(const Graph& g);

// JSON construction spec:
//   { "base": "<edge list>",
//     "family": { "0": "<edge list>", ... },        optional
//     "partition": { "0": [[1,2],[3]], ... } }      optional
// Vertex keys must cover 0..n-1 exactly when the section is present.
struct ConstructionSpec {
  Graph base;
  std::vector<Graph> family;                          // empty if absent
  std::vector<std::vector<std::vector<int>>> blocks;  // empty if absent
  bool has_family = false;
  bool has_partition = false;
};

ConstructionSpec parse_construction_spec(const std::string& json_text);

}  // namespace accdom
