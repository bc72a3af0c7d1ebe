#pragma once

// Graphs, list assignments, weights and the color subgraphs G^x.
//
// A Graph always lives in the index space of its originating instance: an
// induced subgraph keeps the original vertex indices, so indicator vectors of
// its vertex subsets have the instance dimension.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

using Color = int;
using ColorSet = std::set<Color>;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;

  /// Graph on vertices 0..n-1. Rejects self-loops, duplicate edges and
  /// out-of-range endpoints.
  explicit Graph(std::size_t n, std::span<const Edge> edges = {}) : dimension_(n), member_(n, 1), adj_(n) {
    vertices_.resize(n);
    for (std::size_t i = 0; i < n; ++i) vertices_[i] = i;
    for (auto [u, v] : edges) add_edge(u, v);
    finish();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Subgraph induced on `keep` (indices into this graph's index space).
  Graph induced(std::span<const Vertex> keep) const {
    Graph g;
    g.dimension_ = dimension_;
    g.member_.assign(dimension_, 0);
    g.adj_.assign(dimension_, {});
    for (Vertex v : keep) {
      if (!contains(v)) throw InputError("induced: vertex " + std::to_string(v) + " not in graph");
      g.member_[v] = 1;
    }
    for (Vertex v = 0; v < dimension_; ++v) {
      if (g.member_[v]) g.vertices_.push_back(v);
    }
    for (auto [u, v] : edges_) {
      if (g.member_[u] && g.member_[v]) g.add_edge(u, v);
    }
    g.finish();
    return g;
  }

  /// Size of the index space (vertex count of the originating instance).
  std::size_t dimension() const { return dimension_; }
  /// Number of vertices actually present.
  std::size_t order() const { return vertices_.size(); }
  /// Present vertices, ascending.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool contains(Vertex v) const { return v < dimension_ && member_[v]; }
  /// Sorted neighbours of v inside this graph.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const {
    if (u >= dimension_ || v >= dimension_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }
  /// Edges (u < v) in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Graph& other) const {
    return dimension_ == other.dimension_ && vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  void add_edge(Vertex u, Vertex v) {
    if (u >= dimension_ || v >= dimension_) throw InputError("edge endpoint out of range");
    if (!member_[u] || !member_[v]) throw InputError("edge endpoint not in graph");
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  void finish() {
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InputError("duplicate edge");
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::size_t dimension_ = 0;
  std::vector<char> member_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Per-vertex finite color lists. Colors are positive integers.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {
    for (const auto& l : lists_) {
      for (Color c : l) {
        if (c <= 0) throw InputError("colors must be positive, got " + std::to_string(c));
      }
    }
  }

  /// The a-uniform list {1..a} on n vertices.
  static ListAssignment uniform(std::size_t n, int a) {
    ColorSet l;
    for (int c = 1; c <= a; ++c) l.insert(c);
    return ListAssignment(std::vector<ColorSet>(n, l));
  }

  std::size_t size() const { return lists_.size(); }
  const ColorSet& operator[](Vertex v) const { return lists_.at(v); }
  auto begin() const { return lists_.begin(); }
  auto end() const { return lists_.end(); }

  bool operator==(const ListAssignment&) const = default;

 private:
  std::vector<ColorSet> lists_;
};

/// Union of all lists, ascending.
inline std::vector<Color> all_colors(const ListAssignment& lists) {
  ColorSet all;
  for (const auto& l : lists) all.insert(l.begin(), l.end());
  return {all.begin(), all.end()};
}

/// Subgraph of g induced on {v : x in L(v)}; original indices are retained.
inline Graph color_subgraph(const Graph& g, const ListAssignment& lists, Color x) {
  if (lists.size() != g.dimension()) throw DimensionMismatch(g.dimension(), lists.size());
  std::vector<Vertex> keep;
  for (Vertex v : g.vertices()) {
    if (lists[v].count(x)) keep.push_back(v);
  }
  if (keep.empty()) throw UnknownColor(x);
  return g.induced(keep);
}

struct Instance {
  std::vector<std::string> names;
  Graph graph;
  ListAssignment lists;
  std::optional<WeightVector> weights;

  std::size_t size() const { return names.size(); }

  /// Weights, or PreconditionError when the instance carries none.
  const WeightVector& weight() const {
    if (!weights) throw PreconditionError("instance has no weights");
    return *weights;
  }

  bool operator==(const Instance&) const = default;
};

/// Validates that the parts agree and fills default names v1..vn if none given.
inline Instance make_instance(Graph graph, ListAssignment lists, std::optional<WeightVector> weights = std::nullopt,
                              std::vector<std::string> names = {}) {
  const std::size_t n = graph.dimension();
  if (graph.order() != n) throw InputError("instance graph must contain its whole index space");
  if (lists.size() != n) throw DimensionMismatch(n, lists.size());
  if (weights && weights->size() != n) throw DimensionMismatch(n, weights->size());
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  }
  if (names.size() != n) throw DimensionMismatch(n, names.size());
  return Instance{std::move(names), std::move(graph), std::move(lists), std::move(weights)};
}

}  // namespace multicolor
