#pragma once

// Brute-force reference semantics. Nothing here touches maximal independent
// sets, W_max or any other solver routine: colorings are found by plain
// backtracking over per-vertex color subsets, so any disagreement with the
// solver points at a bug in exactly one of the two.

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "coloring_value.hpp"
#include "instance.hpp"
#include "limits.hpp"
#include "vector_algebra.hpp"

namespace multicolor::oracle {

namespace detail {

struct SearchSpec {
  std::vector<std::vector<Color>> allowed;  // per vertex, ascending
  std::vector<ColorSet> required;           // must appear at the vertex
  WeightVector weight;
  // Colors >= this value are interchangeable: a vertex may only introduce
  // the next unused ones, in order. INT_MAX disables symmetry breaking.
  Color interchangeable_from = INT_MAX;
  Color palette_top = 0;  // largest interchangeable color available
};

class Backtracker {
 public:
  Backtracker(const Graph& g, SearchSpec spec, const Limits& limits, const char* what)
      : g_(g), spec_(std::move(spec)), budget_(limits, what), current_(g.dimension()) {}

  /// Calls visit(coloring) on every complete coloring until it returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    stop_ = false;
    Color fresh = spec_.interchangeable_from;
    for (const auto& req : spec_.required) {
      for (Color c : req) {
        if (c >= fresh && c != INT_MAX) fresh = c + 1;
      }
    }
    descend(0, fresh, visit);
  }

 private:
  template <typename Visit>
  void descend(Vertex v, Color fresh, Visit& visit) {
    if (stop_) return;
    budget_.tick();
    if (v == g_.dimension()) {
      if (!visit(current_)) stop_ = true;
      return;
    }
    const auto want = static_cast<std::size_t>(spec_.weight[v]);
    const ColorSet& req = spec_.required[v];
    ColorSet blocked;
    for (Vertex u : g_.neighbors(v)) {
      if (u < v) blocked.insert(current_[u].begin(), current_[u].end());
    }
    for (Color c : req) {
      if (blocked.count(c)) return;
    }
    if (req.size() > want) return;
    const std::size_t extra = want - req.size();

    std::vector<Color> old_pool;
    for (Color c : spec_.allowed[v]) {
      if (blocked.count(c) || req.count(c)) continue;
      if (c >= fresh && c >= spec_.interchangeable_from) continue;
      old_pool.push_back(c);
    }
    const std::size_t fresh_available =
        fresh <= spec_.palette_top && spec_.interchangeable_from != INT_MAX
            ? static_cast<std::size_t>(spec_.palette_top - fresh + 1)
            : 0;

    // Take i colors from the already-seen pool and extra - i brand-new ones.
    for (std::size_t i = std::min(extra, old_pool.size()) + 1; i-- > 0;) {
      const std::size_t new_count = extra - i;
      if (new_count > fresh_available) continue;
      std::vector<std::size_t> idx(i);
      for (std::size_t k = 0; k < i; ++k) idx[k] = k;
      while (true) {
        ColorSet chosen = req;
        for (std::size_t k : idx) chosen.insert(old_pool[k]);
        for (std::size_t k = 0; k < new_count; ++k) chosen.insert(fresh + static_cast<Color>(k));
        current_[v] = std::move(chosen);
        descend(v + 1, fresh + static_cast<Color>(new_count), visit);
        current_[v].clear();
        if (stop_) return;
        if (!next_combination(idx, old_pool.size())) break;
      }
    }
  }

  static bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] < n - k + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  SearchSpec spec_;
  multicolor::detail::BranchBudget budget_;
  Coloring current_;
  bool stop_ = false;
};

inline SearchSpec list_spec(const Instance& inst) {
  SearchSpec spec;
  for (const auto& l : inst.lists) spec.allowed.emplace_back(l.begin(), l.end());
  spec.required.assign(inst.size(), {});
  spec.weight = inst.weight();
  return spec;
}

inline SearchSpec uniform_spec(std::size_t n, int a, const WeightVector& w, Color interchangeable_from) {
  SearchSpec spec;
  std::vector<Color> all;
  for (Color c = 1; c <= a; ++c) all.push_back(c);
  spec.allowed.assign(n, all);
  spec.required.assign(n, {});
  spec.weight = w;
  spec.interchangeable_from = interchangeable_from;
  spec.palette_top = a;
  return spec;
}

}  // namespace detail

/// Some (L,w)-coloring, or nullopt. Vertices are filled in index order,
/// each trying its color subsets in lexicographic order.
inline std::optional<Coloring> brute_colorable(const Instance& inst, const Limits& limits = {}) {
  std::optional<Coloring> found;
  detail::Backtracker bt(inst.graph, detail::list_spec(inst), limits, "brute_colorable");
  bt.run([&](const Coloring& c) {
    found = c;
    return false;
  });
  return found;
}

inline std::set<Coloring> brute_all_colorings(const Instance& inst, const Limits& limits = {}) {
  std::set<Coloring> all;
  detail::Backtracker bt(inst.graph, detail::list_spec(inst), limits, "brute_all_colorings");
  bt.run([&](const Coloring& c) {
    all.insert(c);
    return true;
  });
  return all;
}

/// True iff some (L_a, w)-coloring exists.
inline bool brute_uniform_colorable(const Graph& g, int a, const WeightVector& w, const Limits& limits = {}) {
  bool found = false;
  detail::Backtracker bt(g, detail::uniform_spec(g.dimension(), a, w, 1), limits, "brute_chromatic");
  bt.run([&](const Coloring&) {
    found = true;
    return false;
  });
  return found;
}

/// Least a with an (L_a, w)-coloring.
inline int brute_chromatic(const Graph& g, const WeightVector& w, const Limits& limits = {}) {
  if (w.size() != g.dimension()) throw DimensionMismatch(g.dimension(), w.size());
  if (w.is_zero()) return 0;
  for (int a = 1;; ++a) {
    if (brute_uniform_colorable(g, a, w, limits)) return a;
  }
}

/// Every w* <= w with a coloring and maximal norm (so minimal |w - w*|).
inline VectorSet brute_oncall(const Instance& inst, const Limits& limits = {}) {
  const WeightVector& w = inst.weight();
  const std::size_t n = w.size();
  VectorSet best(n);

  // Walk norm levels from |w| downwards and stop at the first non-empty one.
  for (auto level = norm(w); level >= 0 && best.empty(); --level) {
    WeightVector cand(n);
    auto fill = [&](auto&& self, std::size_t i, WeightVector::value_type left) -> void {
      if (i == n) {
        if (left != 0) return;
        Instance probe = inst;
        probe.weights = cand;
        if (brute_colorable(probe, limits)) best.insert(cand);
        return;
      }
      for (auto x = std::min(w[i], left); x >= 0; --x) {
        cand[i] = x;
        self(self, i + 1, left - x);
      }
      cand[i] = 0;
    };
    fill(fill, 0, level);
  }
  return best;
}

/// Least a >= a0 admitting an (L_a, w)-coloring that contains c0 at every vertex.
inline int brute_nonrecolor_chi(const Graph& g, int a0, const Coloring& c0, const WeightVector& w,
                                const Limits& limits = {}) {
  const std::size_t n = g.dimension();
  if (w.size() != n) throw DimensionMismatch(n, w.size());
  if (c0.size() != n) throw DimensionMismatch(n, c0.size());
  for (int a = a0;; ++a) {
    auto spec = detail::uniform_spec(n, a, w, a0 + 1);
    for (Vertex v = 0; v < n; ++v) spec.required[v] = c0[v];
    bool found = false;
    detail::Backtracker bt(g, std::move(spec), limits, "brute_nonrecolor_chi");
    bt.run([&](const Coloring&) {
      found = true;
      return false;
    });
    if (found) return a;
  }
}

/// Maximal independent sets by scanning every vertex subset of g.
inline VectorSet brute_maximal_independent_sets(const Graph& g) {
  const auto& verts = g.vertices();
  if (verts.size() > 24) throw ResourceLimitExceeded("brute_maximal_independent_sets: more than 24 vertices");
  VectorSet out(g.dimension());
  const std::size_t k = verts.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1U; };
    bool independent = true;
    for (std::size_t i = 0; i < k && independent; ++i) {
      for (std::size_t j = i + 1; j < k && independent; ++j) {
        if (in(i) && in(j) && g.adjacent(verts[i], verts[j])) independent = false;
      }
    }
    if (!independent) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < k && maximal; ++i) {
      if (in(i)) continue;
      bool can_add = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (in(j) && g.adjacent(verts[i], verts[j])) can_add = false;
      }
      if (can_add) maximal = false;
    }
    if (!maximal) continue;
    WeightVector x(g.dimension());
    for (std::size_t i = 0; i < k; ++i) x[verts[i]] = in(i) ? 1 : 0;
    out.insert(std::move(x));
  }
  return out;
}

}  // namespace multicolor::oracle
