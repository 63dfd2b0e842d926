#include "accdom/corona.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "accdom/graph_io.hpp"
#include "json.hpp"

namespace accdom {

void GraphFamily::validate() const {
  if (static_cast<int>(members.size()) != base.vertex_count())
    throw std::invalid_argument("family needs one member per base vertex");
  for (const auto& f : members)
    if (f.vertex_count() < 1)
      throw std::invalid_argument("family members must be nonempty");
}

void NeighborhoodPartition::normalize() {
  for (auto& vertex_blocks : blocks) {
    for (auto& block : vertex_blocks) std::sort(block.begin(), block.end());
    std::sort(vertex_blocks.begin(), vertex_blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                if (a.empty() || b.empty()) return a.size() < b.size();
                return a[0] < b[0];
              });
  }
}

void NeighborhoodPartition::validate() const {
  int n = base.vertex_count();
  if (static_cast<int>(blocks.size()) != n)
    throw std::invalid_argument("partition needs one block list per vertex");
  for (int v = 0; v < n; ++v) {
    std::vector<int> merged;
    for (const auto& block : blocks[v]) {
      if (block.empty())
        throw std::invalid_argument("empty block at vertex " +
                                    std::to_string(v));
      merged.insert(merged.end(), block.begin(), block.end());
    }
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
      throw std::invalid_argument("overlapping blocks at vertex " +
                                  std::to_string(v));
    if (merged != base.neighbors(v))
      throw std::invalid_argument("blocks at vertex " + std::to_string(v) +
                                  " do not cover its neighborhood exactly");
  }
}

Graph corona_k1(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  std::vector<VertexLabel> labels;
  labels.reserve(2 * n);
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::base_copy(v));
  for (int v = 0; v < n; ++v) {
    labels.push_back(VertexLabel::pendant(v));
    edges.emplace_back(v, n + v);
  }
  return Graph(2 * n, edges, std::move(labels));
}

Graph f_corona(const GraphFamily& family) {
  family.validate();
  const Graph& g = family.base;
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  std::vector<VertexLabel> labels;
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::base_copy(v));
  int next = n;
  for (int v = 0; v < n; ++v) {
    const Graph& f = family.members[v];
    int offset = next;
    for (int x = 0; x < f.vertex_count(); ++x) {
      labels.push_back(VertexLabel::member(v, x));
      edges.emplace_back(v, offset + x);
    }
    for (auto [a, b] : f.edges()) edges.emplace_back(offset + a, offset + b);
    next += f.vertex_count();
  }
  return Graph(next, edges, std::move(labels));
}

Graph p_corona(const NeighborhoodPartition& partition) {
  partition.validate();
  const Graph& g = partition.base;
  int n = g.vertex_count();

  std::vector<VertexLabel> labels;
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::pendant(v));

  // index of the block vertex covering each neighbor: block_at[v][u]
  std::vector<std::map<int, int>> block_at(n);
  int next = n;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (const auto& block : partition.blocks[v]) {
      labels.push_back(VertexLabel::block(v, block));
      for (int u : block) block_at[v][u] = next;
      edges.emplace_back(v, next);
      ++next;
    }
  for (auto [u, v] : g.edges())
    edges.emplace_back(block_at[v].at(u), block_at[u].at(v));
  return Graph(next, edges, std::move(labels));
}

Graph s2_subdivision(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexLabel> labels;
  for (int v = 0; v < n; ++v) labels.push_back(VertexLabel::plain(v));
  std::vector<std::pair<int, int>> edges;
  int next = n;
  for (auto [u, v] : g.edges()) {
    labels.push_back(VertexLabel::edge_end(u, u, v));
    labels.push_back(VertexLabel::edge_end(v, u, v));
    edges.emplace_back(u, next);
    edges.emplace_back(next, next + 1);
    edges.emplace_back(next + 1, v);
    next += 2;
  }
  return Graph(next, edges, std::move(labels));
}

bool natural_iso_check(const Graph& a, const Graph& b,
                       const std::vector<int>& mapping) {
  int n = a.vertex_count();
  if (static_cast<int>(mapping.size()) != n)
    throw std::invalid_argument("mapping size does not match first graph");
  if (b.vertex_count() != n) return false;
  std::vector<char> hit(n, 0);
  for (int img : mapping) {
    if (img < 0 || img >= n)
      throw std::invalid_argument("mapping image out of range");
    if (hit[img]) throw std::invalid_argument("mapping is not a bijection");
    hit[img] = 1;
  }
  if (a.edge_count() != b.edge_count()) return false;
  for (int u = 0; u < n; ++u)
    for (int v : a.neighbors(u))
      if (u < v && !b.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

namespace {

std::vector<int> match_by_label(const Graph& from, const Graph& to,
                                const std::vector<VertexLabel>& wanted) {
  std::map<std::string, int> where;
  for (int v = 0; v < to.vertex_count(); ++v)
    where[to.label(v).to_string()] = v;
  std::vector<int> mapping(from.vertex_count(), -1);
  for (int v = 0; v < from.vertex_count(); ++v) {
    auto it = where.find(wanted[v].to_string());
    if (it == where.end())
      throw std::invalid_argument("no counterpart for vertex labeled " +
                                  from.label(v).to_string());
    mapping[v] = it->second;
  }
  return mapping;
}

}  // namespace

std::vector<int> pcorona_to_corona_k1_map(const Graph& pcor,
                                          const Graph& cor) {
  // The degree-1 center plays the pendant; its whole-neighborhood block
  // vertex carries the base adjacency and plays the base copy.
  std::vector<VertexLabel> wanted;
  for (int v = 0; v < pcor.vertex_count(); ++v) {
    const VertexLabel& l = pcor.label(v);
    if (std::holds_alternative<VertexLabel::One>(l.tag))
      wanted.push_back(VertexLabel::pendant(l.base));
    else if (std::holds_alternative<VertexLabel::Block>(l.tag))
      wanted.push_back(VertexLabel::base_copy(l.base));
    else
      throw std::invalid_argument("not a partition corona labeling");
  }
  return match_by_label(pcor, cor, wanted);
}

std::vector<int> pcorona_to_s2_map(const Graph& pcor, const Graph& s2g) {
  // (v,1) -> v and the singleton block (v,{u}) -> (v,euv)
  std::vector<VertexLabel> wanted;
  for (int v = 0; v < pcor.vertex_count(); ++v) {
    const VertexLabel& l = pcor.label(v);
    if (std::holds_alternative<VertexLabel::One>(l.tag)) {
      wanted.push_back(VertexLabel::plain(l.base));
    } else if (const auto* blk = std::get_if<VertexLabel::Block>(&l.tag)) {
      if (blk->vertices.size() != 1)
        throw std::invalid_argument("blocks must be singletons here");
      wanted.push_back(VertexLabel::edge_end(l.base, l.base, blk->vertices[0]));
    } else {
      throw std::invalid_argument("not a partition corona labeling");
    }
  }
  return match_by_label(pcor, s2g, wanted);
}

NeighborhoodPartition whole_neighborhood_partition(const Graph& g) {
  NeighborhoodPartition p{g, {}};
  p.blocks.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.neighbors(v).empty()) p.blocks[v].push_back(g.neighbors(v));
  p.normalize();
  return p;
}

NeighborhoodPartition singleton_partition(const Graph& g) {
  NeighborhoodPartition p{g, {}};
  p.blocks.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v)) p.blocks[v].push_back({u});
  p.normalize();
  return p;
}

ConstructionSpec parse_construction_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("construction spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("base"))
    throw std::invalid_argument("construction spec needs a \"base\" graph");

  ConstructionSpec spec;
  spec.base = parse_graph(doc.at("base").get<std::string>(),
                          GraphFormat::edge_list);
  int n = spec.base.vertex_count();

  auto vertex_key = [&](const std::string& key) {
    std::size_t pos = 0;
    int v = std::stoi(key, &pos);
    if (pos != key.size() || v < 0 || v >= n)
      throw std::invalid_argument("vertex key out of range: " + key);
    return v;
  };

  if (doc.contains("family")) {
    spec.has_family = true;
    spec.family.resize(n);
    std::vector<char> given(n, 0);
    for (auto& [key, value] : doc.at("family").items()) {
      int v = vertex_key(key);
      spec.family[v] =
          parse_graph(value.template get<std::string>(), GraphFormat::edge_list);
      given[v] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!given[v])
        throw std::invalid_argument("family is missing vertex " +
                                    std::to_string(v));
  }

  if (doc.contains("partition")) {
    spec.has_partition = true;
    spec.blocks.resize(n);
    std::vector<char> given(n, 0);
    for (auto& [key, value] : doc.at("partition").items()) {
      int v = vertex_key(key);
      spec.blocks[v] = value.template get<std::vector<std::vector<int>>>();
      given[v] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!given[v])
        throw std::invalid_argument("partition is missing vertex " +
                                    std::to_string(v));
  }
  return spec;
}

}  // namespace accdom
