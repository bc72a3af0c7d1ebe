#pragma once

// Non-recoloring extension of a precoloring C0 on colors {1..a0} to a larger
// demand w. The colors of C0 stay in place; the extension first grows C0
// inside {1..a0} as far as a maximal coloring allows, then covers the rest of
// the demand with a fresh block of colors {a0+1..bound}.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "chromatic.hpp"
#include "coloring.hpp"
#include "instance.hpp"
#include "limits.hpp"
#include "mis.hpp"
#include "oracle.hpp"
#include "permissible.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

namespace detail {

inline void check_precoloring(const Graph& g, int a0, const Coloring& c0) {
  if (a0 < 1) throw PreconditionError("base color count must be positive");
  if (c0.size() != g.dimension()) throw DimensionMismatch(g.dimension(), c0.size());
  if (g.order() != g.dimension()) throw PreconditionError("precoloring graph must span its index space");
  for (Vertex v = 0; v < c0.size(); ++v) {
    for (Color c : c0[v]) {
      if (c < 1 || c > a0) {
        throw PreconditionError("precoloring uses color " + std::to_string(c) + " outside 1.." + std::to_string(a0));
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    for (Color c : c0[u]) {
      if (c0[v].count(c)) throw PreconditionError("precoloring is not proper: color " + std::to_string(c) + " on an edge");
    }
  }
}

}  // namespace detail

/// Members of W_max(G, L_a0) reachable by a maximal coloring that contains
/// c0. Under uniform lists G^x = G, so color x may use any maximal
/// independent set of G containing {v : x in c0(v)}.
inline WmaxSet wmax_constrained(const Graph& g, int a0, const Coloring& c0, const Limits& limits = {}) {
  detail::check_precoloring(g, a0, c0);
  const std::size_t n = g.dimension();
  const VectorSet mis = enumerate_mis(g);

  std::map<WeightVector, Certificate> current;
  current.emplace(WeightVector(n), Certificate{});
  for (Color x = 1; x <= a0; ++x) {
    std::vector<WeightVector> family;
    for (const auto& s : mis) {
      bool covers = true;
      for (Vertex v = 0; v < n && covers; ++v) covers = !c0[v].count(x) || s[v] == 1;
      if (covers) family.push_back(s);
    }
    std::map<WeightVector, Certificate> next;
    for (const auto& [sum, cert] : current) {
      for (const auto& s : family) {
        auto [it, inserted] = next.try_emplace(sum + s);
        if (inserted) {
          it->second = cert;
          it->second[x] = support(s);
          multicolor::detail::check_vector_cap(next.size(), limits, "wmax_constrained");
        }
      }
    }
    current = std::move(next);
  }
  WmaxSet out{VectorSet(n), {}};
  for (const auto& kv : current) out.vectors.insert(kv.first);
  out.certificates = std::move(current);
  return out;
}

/// { w - min(w, w1) : w1 in wmax_constrained(g, a0, c0) }.
inline VectorSet delta_set(const Graph& g, int a0, const Coloring& c0, const WeightVector& w,
                           const Limits& limits = {}) {
  if (w.size() != g.dimension()) throw DimensionMismatch(g.dimension(), w.size());
  if (!leq(c0.weight_vector(), w)) throw PreconditionError("demand must dominate the precoloring's weight");
  VectorSet out(g.dimension());
  for (const auto& w1 : wmax_constrained(g, a0, c0, limits).vectors) out.insert(w - vec_min(w, w1));
  return out;
}

struct ExtensionResult {
  /// a0 + min over the delta set of chi(G, w').
  int bound = 0;
  /// Valid (L_bound, w)-coloring containing the precoloring.
  Coloring coloring;
  /// Exact optimum from the brute-force search, when requested.
  std::optional<int> exact;
};

inline ExtensionResult extend_coloring(const Graph& g, int a0, const Coloring& c0, const WeightVector& w,
                                       const Limits& limits = {}) {
  const std::size_t n = g.dimension();
  if (w.size() != n) throw DimensionMismatch(n, w.size());
  if (!leq(c0.weight_vector(), w)) throw PreconditionError("demand must dominate the precoloring's weight");
  const WmaxSet constrained = wmax_constrained(g, a0, c0, limits);

  // First (lexicographic) source vector for every delta.
  std::map<WeightVector, WeightVector> source;
  for (const auto& w1 : constrained.vectors) source.try_emplace(w - vec_min(w, w1), w1);
  if (source.empty()) throw PreconditionError("empty delta set");

  const WeightVector* best_delta = nullptr;
  std::optional<ChromaticResult> best;
  for (const auto& [delta, w1] : source) {
    auto result = weighted_chromatic(g, delta, limits);
    if (!best || result.chi < best->chi) {
      best = std::move(result);
      best_delta = &delta;
    }
  }

  const WeightVector& w_source = source.at(*best_delta);
  const WeightVector w3 = vec_min(w, w_source);
  const Instance base = make_instance(g, ListAssignment::uniform(n, a0), w_source);
  const Coloring full = build_max_coloring(base, constrained.certificate(w_source));
  const Coloring c3 = shrink(full, w_source - w3, &c0);

  Coloring c4(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Color c : best->coloring[v]) c4[v].insert(c + a0);
  }
  return ExtensionResult{a0 + best->chi, union_of(c3, c4), std::nullopt};
}

/// Exact chi(G, w, C0) by brute force; bounded by Limits::max_branches.
inline int exact_nonrecolor_chi(const Graph& g, int a0, const Coloring& c0, const WeightVector& w,
                                const Limits& limits = {}) {
  detail::check_precoloring(g, a0, c0);
  if (w.size() != g.dimension()) throw DimensionMismatch(g.dimension(), w.size());
  if (!leq(c0.weight_vector(), w)) throw PreconditionError("demand must dominate the precoloring's weight");
  return oracle::brute_nonrecolor_chi(g, a0, c0, w, limits);
}

}  // namespace multicolor
