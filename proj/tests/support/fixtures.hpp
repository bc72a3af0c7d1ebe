#pragma once

// Named fixtures and random/exhaustive instance generators for the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <multicolor/multicolor.hpp>

namespace multicolor::test_support {

inline Instance fix_sv(std::optional<WeightVector> w = std::nullopt) {
  return make_instance(Graph(1), ListAssignment({{1, 2}}), std::move(w));
}

inline Instance fix_k2(std::optional<WeightVector> w = std::nullopt) {
  return make_instance(Graph(2, {{0, 1}}), ListAssignment::uniform(2, 1), std::move(w));
}

inline Instance fix_p3(std::optional<WeightVector> w = std::nullopt) {
  return make_instance(Graph(3, {{0, 1}, {1, 2}}), ListAssignment({{1}, {1, 2}, {2}}), std::move(w));
}

inline Instance fix_k3(std::optional<WeightVector> w = std::nullopt) {
  return make_instance(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), ListAssignment::uniform(3, 2), std::move(w));
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

inline WeightVector constant(std::size_t n, WeightVector::value_type value) {
  return WeightVector(std::vector<WeightVector::value_type>(n, value));
}

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// Each color of {1..max_color} joins each list independently with probability p.
inline ListAssignment random_lists(std::mt19937& rng, std::size_t n, int max_color, double p = 0.6) {
  std::bernoulli_distribution coin(p);
  std::vector<ColorSet> lists(n);
  for (auto& l : lists) {
    for (Color c = 1; c <= max_color; ++c) {
      if (coin(rng)) l.insert(c);
    }
  }
  return ListAssignment(std::move(lists));
}

inline WeightVector random_weight(std::mt19937& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> pick(0, max_entry);
  WeightVector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = pick(rng);
  return w;
}

/// Every vector with entries in [0, max_entry], in lexicographic order.
inline std::vector<WeightVector> all_weights(std::size_t n, int max_entry) {
  std::vector<WeightVector> out;
  WeightVector w(n);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == max_entry) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.dimension(), 0);
  std::vector<Vertex> stack{g.vertices().front()};
  seen[stack.back()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.order();
}

/// One representative per isomorphism class of graphs on n vertices
/// (n <= 7), ordered by canonical edge mask.
inline std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t n) {
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pair_index[pairs[k].first][pairs[k].second] = k;
    pair_index[pairs[k].second][pairs[k].first] = k;
  }
  std::vector<std::vector<std::size_t>> perm_maps;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> map(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) map[k] = pair_index[perm[pairs[k].first]][perm[pairs[k].second]];
    perm_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> canon;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::uint64_t best = mask;
    for (const auto& map : perm_maps) {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((mask >> k) & 1U) image |= std::uint64_t{1} << map[k];
      }
      best = std::min(best, image);
      if (best < mask) break;
    }
    if (best == mask) canon.insert(mask);
  }
  std::vector<Graph> out;
  for (auto mask : canon) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(pairs[k]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

inline std::set<Coloring> as_set(const std::vector<Coloring>& v) { return {v.begin(), v.end()}; }

}  // namespace multicolor::test_support
