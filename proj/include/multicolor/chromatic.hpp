#pragma once

// Weighted chromatic number chi(G, w): the least a such that G has an
// (L_a, w)-coloring for the uniform list L_a = {1..a}.
//
// Under L_a every G^x is G itself, so W_max(G, L_a) is the set of sums of a
// (not necessarily distinct) maximal independent sets of G. The search starts
// at the lower bound ceil(|w| / alpha(G)) and raises a until some such sum
// dominates w. At a = |w| a witness always exists, since every vertex lies in
// some maximal independent set.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "coloring.hpp"
#include "instance.hpp"
#include "limits.hpp"
#include "mis.hpp"
#include "permissible.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

/// Size of a maximum independent set. Throws on a graph without vertices.
inline std::size_t independence_number(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("independence_number: graph has no vertices");
  std::size_t best = 0;
  for (const auto& s : enumerate_mis(g)) best = std::max(best, static_cast<std::size_t>(norm(s)));
  return best;
}

struct ChromaticResult {
  int chi = 0;
  /// Valid (L_chi, w)-coloring.
  Coloring coloring;
  /// The dominating member of W_max(G, L_chi) the coloring was cut from.
  WeightVector witness;
};

namespace detail {

/// Looks for a multiset of `a` members of `family` whose sum dominates w.
/// Failed (start index, picks left, residual demand) states are remembered
/// across calls, so ascending a reuses earlier work.
class UniformWitnessSearch {
 public:
  UniformWitnessSearch(std::vector<WeightVector> family, const WeightVector& w, const Limits& limits)
      : family_(std::move(family)), budget_(limits, "weighted_chromatic") {
    const std::size_t n = w.size();
    last_cover_.assign(n, -1);
    for (std::size_t k = 0; k < family_.size(); ++k) {
      for (std::size_t v = 0; v < n; ++v) {
        if (family_[k][v]) last_cover_[v] = static_cast<long>(k);
      }
    }
    suffix_max_.assign(family_.size() + 1, 0);
    for (std::size_t k = family_.size(); k-- > 0;) {
      suffix_max_[k] = std::max(suffix_max_[k + 1], norm(family_[k]));
    }
    demand_ = w;
  }

  /// Indices (non-decreasing, exactly a of them) or empty if none exist.
  std::optional<std::vector<std::size_t>> find(int a) {
    picks_.clear();
    if (!search(0, a)) return std::nullopt;
    while (picks_.size() < static_cast<std::size_t>(a)) picks_.push_back(picks_.empty() ? 0 : picks_.back());
    return picks_;
  }

 private:
  bool search(std::size_t from, int left) {
    budget_.tick();
    WeightVector::value_type total = 0;
    for (std::size_t v = 0; v < demand_.size(); ++v) {
      if (demand_[v] == 0) continue;
      if (demand_[v] > left || last_cover_[v] < static_cast<long>(from)) return false;
      total += demand_[v];
    }
    if (total == 0) return true;
    if (from >= family_.size() || total > left * suffix_max_[from]) return false;

    std::vector<WeightVector::value_type> key(demand_.begin(), demand_.end());
    key.push_back(static_cast<WeightVector::value_type>(from));
    key.push_back(left);
    if (failed_.count(key)) return false;

    for (std::size_t k = from; k < family_.size(); ++k) {
      const auto& s = family_[k];
      bool useful = false;
      for (std::size_t v = 0; v < demand_.size() && !useful; ++v) useful = s[v] && demand_[v] > 0;
      if (!useful) continue;
      std::vector<Vertex> lowered;
      for (std::size_t v = 0; v < demand_.size(); ++v) {
        if (s[v] && demand_[v] > 0) {
          --demand_[v];
          lowered.push_back(v);
        }
      }
      picks_.push_back(k);
      bool ok = search(k, left - 1);
      if (ok) return true;
      picks_.pop_back();
      for (Vertex v : lowered) ++demand_[v];
    }
    failed_.insert(std::move(key));
    return false;
  }

  std::vector<WeightVector> family_;
  BranchBudget budget_;
  std::vector<long> last_cover_;
  std::vector<WeightVector::value_type> suffix_max_;
  WeightVector demand_;
  std::vector<std::size_t> picks_;
  std::set<std::vector<WeightVector::value_type>> failed_;
};

}  // namespace detail

inline ChromaticResult weighted_chromatic(const Graph& g, const WeightVector& w, const Limits& limits = {}) {
  const std::size_t n = g.dimension();
  if (w.size() != n) throw DimensionMismatch(n, w.size());
  if (g.order() != n) throw PreconditionError("weighted_chromatic: graph must span its index space");
  if (w.is_zero()) return ChromaticResult{0, Coloring(n), WeightVector(n)};

  const VectorSet mis = enumerate_mis(g);
  std::vector<WeightVector> family(mis.begin(), mis.end());
  WeightVector::value_type alpha = 0;
  for (const auto& s : family) alpha = std::max(alpha, norm(s));

  detail::UniformWitnessSearch search(family, w, limits);
  const auto total = norm(w);
  for (int a = static_cast<int>((total + alpha - 1) / alpha);; ++a) {
    auto picks = search.find(a);
    if (!picks) continue;
    Certificate cert;
    WeightVector witness(n);
    for (std::size_t i = 0; i < picks->size(); ++i) {
      const auto& s = family[(*picks)[i]];
      cert[static_cast<Color>(i + 1)] = support(s);
      witness += s;
    }
    Instance inst = make_instance(g, ListAssignment::uniform(n, a), w);
    Coloring full = build_max_coloring(inst, cert);
    return ChromaticResult{a, shrink(full, witness - w), witness};
  }
}

}  // namespace multicolor
