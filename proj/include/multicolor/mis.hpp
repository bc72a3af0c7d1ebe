#pragma once

// Enumeration of inclusion-maximal independent sets.
//
// The enumerator is Bron-Kerbosch with Tomita pivoting run on the complement
// graph: cliques of the complement are exactly the independent sets of the
// graph. Results are indicator vectors in the graph's index space.

#include <algorithm>
#include <span>
#include <vector>

#include "instance.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

/// True iff `set` is independent in h and every other vertex of h has a
/// neighbour in `set`. Throws if a member is not a vertex of h.
inline bool is_maximal_independent(const Graph& h, std::span<const Vertex> set) {
  std::vector<char> in(h.dimension(), 0);
  for (Vertex v : set) {
    if (!h.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    in[v] = 1;
  }
  for (Vertex v : set) {
    for (Vertex u : h.neighbors(v)) {
      if (in[u]) return false;
    }
  }
  for (Vertex v : h.vertices()) {
    if (in[v]) continue;
    const auto& nb = h.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return in[u] != 0; })) return false;
  }
  return true;
}

inline bool is_maximal_independent(const Graph& h, const WeightVector& indicator_vector) {
  if (indicator_vector.size() != h.dimension()) throw DimensionMismatch(h.dimension(), indicator_vector.size());
  return is_maximal_independent(h, support(indicator_vector));
}

/// Zeroes every coordinate outside V(hx).
inline WeightVector restrict_to_subgraph(const WeightVector& set, const Graph& hx) {
  if (set.size() != hx.dimension()) throw DimensionMismatch(hx.dimension(), set.size());
  WeightVector out(set.size());
  for (Vertex v : hx.vertices()) out[v] = set[v];
  return out;
}

namespace detail {

class MisEnumerator {
 public:
  explicit MisEnumerator(const Graph& h) : h_(h), in_current_(h.dimension(), 0) {}

  VectorSet run() {
    VectorSet out(h_.dimension());
    result_ = &out;
    std::vector<Vertex> candidates = h_.vertices();
    std::vector<Vertex> excluded;
    expand(candidates, excluded);
    return out;
  }

 private:
  // Vertices of `pool` other than v and not adjacent to v: the complement
  // neighbourhood restricted to `pool`.
  std::vector<Vertex> compatible(const std::vector<Vertex>& pool, Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u : pool) {
      if (u != v && !h_.adjacent(u, v)) out.push_back(u);
    }
    return out;
  }

  void expand(std::vector<Vertex>& candidates, std::vector<Vertex>& excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) emit();
      return;
    }
    // Pivot maximising |candidates compatible with it| leaves the fewest branches.
    Vertex pivot = candidates.front();
    std::size_t best = 0;
    bool have_best = false;
    auto consider = [&](Vertex u) {
      std::size_t count = 0;
      for (Vertex c : candidates) {
        if (c != u && !h_.adjacent(c, u)) ++count;
      }
      if (!have_best || count > best) {
        best = count;
        pivot = u;
        have_best = true;
      }
    };
    for (Vertex u : candidates) consider(u);
    for (Vertex u : excluded) consider(u);

    std::vector<Vertex> branch;
    for (Vertex c : candidates) {
      if (c == pivot || h_.adjacent(c, pivot)) branch.push_back(c);
    }
    for (Vertex v : branch) {
      auto next_candidates = compatible(candidates, v);
      auto next_excluded = compatible(excluded, v);
      in_current_[v] = 1;
      expand(next_candidates, next_excluded);
      in_current_[v] = 0;
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.push_back(v);
    }
  }

  void emit() {
    WeightVector x(h_.dimension());
    for (Vertex v : h_.vertices()) x[v] = in_current_[v];
    result_->insert(std::move(x));
  }

  const Graph& h_;
  std::vector<WeightVector::value_type> in_current_;
  VectorSet* result_ = nullptr;
};

}  // namespace detail

/// All inclusion-maximal independent sets of h as indicator vectors, in
/// lexicographic order. A graph without vertices yields {0}.
inline VectorSet enumerate_mis(const Graph& h) { return detail::MisEnumerator(h).run(); }

}  // namespace multicolor
