#include "accdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace accdom {

VertexSet::VertexSet(int host_size) : host_(host_size) {
  if (host_size < 0 || host_size > kMaxSubsetVertices)
    throw std::invalid_argument("vertex set host size out of range: " +
                                std::to_string(host_size));
}

VertexSet VertexSet::full(int host_size) {
  VertexSet s(host_size);
  s.bits_ = host_size == 64 ? ~0ULL : (1ULL << host_size) - 1;
  return s;
}

VertexSet VertexSet::from_bits(int host_size, std::uint64_t bits) {
  VertexSet s(host_size);
  if (bits & ~full(host_size).bits_)
    throw std::invalid_argument("vertex set bits exceed host size");
  s.bits_ = bits;
  return s;
}

VertexSet VertexSet::of(int host_size, const std::vector<int>& members) {
  VertexSet s(host_size);
  for (int v : members) s = s.with(v);
  return s;
}

void VertexSet::check_vertex(int v) const {
  if (v < 0 || v >= host_)
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside host range [0," + std::to_string(host_) +
                            ")");
}

void VertexSet::check_host(const VertexSet& other) const {
  if (host_ != other.host_)
    throw std::invalid_argument("vertex set host size mismatch: " +
                                std::to_string(host_) + " vs " +
                                std::to_string(other.host_));
}

int VertexSet::count() const { return std::popcount(bits_); }

bool VertexSet::contains(int v) const {
  check_vertex(v);
  return (bits_ >> v) & 1;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::uint64_t b = bits_; b; b &= b - 1)
    out.push_back(std::countr_zero(b));
  return out;
}

VertexSet VertexSet::with(int v) const {
  check_vertex(v);
  VertexSet s = *this;
  s.bits_ |= 1ULL << v;
  return s;
}

VertexSet VertexSet::without(int v) const {
  check_vertex(v);
  VertexSet s = *this;
  s.bits_ &= ~(1ULL << v);
  return s;
}

VertexSet VertexSet::union_with(const VertexSet& other) const {
  check_host(other);
  VertexSet s = *this;
  s.bits_ |= other.bits_;
  return s;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  check_host(other);
  VertexSet s = *this;
  s.bits_ &= other.bits_;
  return s;
}

VertexSet VertexSet::difference(const VertexSet& other) const {
  check_host(other);
  VertexSet s = *this;
  s.bits_ &= ~other.bits_;
  return s;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  s.bits_ = full(host_).bits_ & ~bits_;
  return s;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  check_host(other);
  return (bits_ & ~other.bits_) == 0;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_host(other);
  return (bits_ & other.bits_) != 0;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

VertexLabel VertexLabel::edge_end(int v, int a, int b) {
  if (a > b) std::swap(a, b);
  return {v, Edge{a, b}};
}

std::string VertexLabel::to_string() const {
  struct Render {
    int base;
    std::string operator()(std::monostate) const { return std::to_string(base); }
    std::string operator()(const Zero&) const {
      return "(" + std::to_string(base) + ",0)";
    }
    std::string operator()(const One&) const {
      return "(" + std::to_string(base) + ",1)";
    }
    std::string operator()(const Member& m) const {
      return "(" + std::to_string(base) + ",x" + std::to_string(m.index) + ")";
    }
    std::string operator()(const Block& b) const {
      std::string out = "(" + std::to_string(base) + ",{";
      for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b.vertices[i]);
      }
      return out + "})";
    }
    std::string operator()(const Edge& e) const {
      return "(" + std::to_string(base) + ",e" + std::to_string(e.u) + "-" +
             std::to_string(e.v) + ")";
    }
  };
  return std::visit(Render{base}, tag);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<VertexLabel> labels)
    : n_(n), adj_(n), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label count does not match vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n_; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge at vertex " +
                                  std::to_string(v));
  }
  m_ = static_cast<long long>(edges.size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return adj_[v];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const VertexLabel& Graph::label(int v) const {
  if (!has_labels()) throw std::logic_error("graph has no labels");
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return labels_[v];
}

namespace {

void require_subset_host(const Graph& g) {
  if (g.vertex_count() > kMaxSubsetVertices)
    throw std::invalid_argument(
        "vertex-set operations support at most " +
        std::to_string(kMaxSubsetVertices) + " vertices, got " +
        std::to_string(g.vertex_count()));
}

}  // namespace

VertexSet closed_neighborhood(const Graph& g, int v) {
  require_subset_host(g);
  VertexSet s(g.vertex_count());
  s = s.with(v);
  for (int u : g.neighbors(v)) s = s.with(u);
  return s;
}

VertexSet private_neighborhood(const Graph& g, int x, const VertexSet& s) {
  require_subset_host(g);
  if (s.host_size() != g.vertex_count())
    throw std::invalid_argument("vertex set host does not match graph");
  if (!s.contains(x))
    throw std::invalid_argument("private neighborhood requires x in the set");
  VertexSet covered_by_rest(g.vertex_count());
  for (int y : s.without(x).members())
    covered_by_rest = covered_by_rest.union_with(closed_neighborhood(g, y));
  return closed_neighborhood(g, x).difference(covered_by_rest);
}

LeafSupport leaf_and_support_sets(const Graph& g) {
  require_subset_host(g);
  int n = g.vertex_count();
  VertexSet leaves(n), supports(n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) {
      leaves = leaves.with(v);
      supports = supports.with(g.neighbors(v)[0]);
    }
  // in K2 both vertices are leaves and both are supports; the sets overlap
  return {leaves, supports};
}

VertexSet universal_vertices(const Graph& g) {
  require_subset_host(g);
  int n = g.vertex_count();
  VertexSet out(n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) out = out.with(v);
  return out;
}

int component_count(const Graph& g) {
  return static_cast<int>(components(g).size());
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  int n = g.vertex_count();
  std::vector<int> new_index(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= n)
      throw std::invalid_argument("kept vertex out of range");
    if (new_index[v] != -1)
      throw std::invalid_argument("kept vertex listed twice");
    if (i > 0 && keep[i - 1] >= v)
      throw std::invalid_argument("kept vertices must be sorted ascending");
    new_index[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : keep)
    for (int u : g.neighbors(v))
      if (v < u && new_index[u] != -1)
        edges.emplace_back(new_index[v], new_index[u]);
  std::vector<VertexLabel> labels;
  if (g.has_labels()) {
    labels.reserve(keep.size());
    for (int v : keep) labels.push_back(g.label(v));
  }
  return {Graph(static_cast<int>(keep.size()), edges, std::move(labels)),
          keep};
}

Subgraph delete_vertices(const Graph& g, const VertexSet& s) {
  require_subset_host(g);
  if (s.host_size() != g.vertex_count())
    throw std::invalid_argument("vertex set host does not match graph");
  std::vector<int> keep;
  keep.reserve(g.vertex_count() - s.count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!s.contains(v)) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace accdom
