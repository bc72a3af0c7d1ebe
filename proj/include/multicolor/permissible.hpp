#pragma once

// The set W_max(G, L) of maximal weight vectors and the permissibility test
// built on it: w is permissible iff some member of W_max dominates it.
//
// W_max is the vectorial sum over every color x of the indicator vectors of
// the maximal independent sets of G^x. It is built one color at a time,
// deriving MIS(G^x) from MIS(G) by restriction plus a maximality check. The
// intermediate set can grow as O(m^l) for m = |MIS(G)| and l colors; the
// vector cap in Limits guards that growth.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "instance.hpp"
#include "limits.hpp"
#include "mis.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

/// For each color, the maximal independent set of G^x it contributes.
using Certificate = std::map<Color, std::vector<Vertex>>;

struct WmaxSet {
  VectorSet vectors;
  /// One decomposition per vector (the first found in color-ascending,
  /// lexicographic order).
  std::map<WeightVector, Certificate> certificates;

  const Certificate& certificate(const WeightVector& v) const {
    auto it = certificates.find(v);
    if (it == certificates.end()) throw PreconditionError("no certificate for " + v.to_string());
    return it->second;
  }
};

struct ColorFamily {
  Color color;
  Graph subgraph;
  /// MIS(G^x) as indicator vectors, lexicographic order.
  std::vector<WeightVector> sets;
};

/// MIS(G^x) for every color of L, obtained by restricting each member of
/// `mis_of_g` to G^x and keeping restrictions that are maximal there.
inline std::vector<ColorFamily> color_families(const Graph& g, const ListAssignment& lists,
                                               const VectorSet& mis_of_g) {
  std::vector<ColorFamily> out;
  for (Color c : all_colors(lists)) {
    ColorFamily fam{c, color_subgraph(g, lists, c), {}};
    VectorSet restricted(g.dimension());
    for (const auto& s : mis_of_g) {
      auto r = restrict_to_subgraph(s, fam.subgraph);
      if (is_maximal_independent(fam.subgraph, r)) restricted.insert(std::move(r));
    }
    fam.sets.assign(restricted.begin(), restricted.end());
    out.push_back(std::move(fam));
  }
  return out;
}

inline std::vector<ColorFamily> color_families(const Graph& g, const ListAssignment& lists) {
  return color_families(g, lists, enumerate_mis(g));
}

struct WmaxOptions {
  /// Drop dominated vectors after every color step. The hyperrectangle is
  /// unchanged but the set is no longer W_max itself.
  bool prune_dominated = false;
  Limits limits{};
};

inline WmaxSet wmax(const Graph& g, const ListAssignment& lists, const WmaxOptions& options = {}) {
  if (lists.size() != g.dimension()) throw DimensionMismatch(g.dimension(), lists.size());
  if (all_colors(lists).empty()) throw PreconditionError("wmax: the list assignment has no colors");

  const std::size_t n = g.dimension();
  std::map<WeightVector, Certificate> current;
  current.emplace(WeightVector(n), Certificate{});

  for (const auto& fam : color_families(g, lists)) {
    std::map<WeightVector, Certificate> next;
    for (const auto& [s, cert] : current) {
      for (const auto& r : fam.sets) {
        auto [it, inserted] = next.try_emplace(s + r);
        if (inserted) {
          it->second = cert;
          it->second[fam.color] = support(r);
          detail::check_vector_cap(next.size(), options.limits, "wmax");
        }
      }
    }
    if (options.prune_dominated) {
      VectorSet all(n);
      for (const auto& kv : next) all.insert(kv.first);
      VectorSet kept = prune_dominated(all);
      std::erase_if(next, [&](const auto& kv) { return !kept.contains(kv.first); });
    }
    current = std::move(next);
  }

  WmaxSet out{VectorSet(n), {}};
  for (auto& [v, cert] : current) out.vectors.insert(v);
  out.certificates = std::move(current);
  return out;
}

inline WmaxSet wmax(const Instance& inst, const WmaxOptions& options = {}) {
  return wmax(inst.graph, inst.lists, options);
}

/// W_max(G, L_a) as { sum x_i S_i : sum x_i = a } over the MIS family of G.
/// Colors 1..a are assigned to the summands in index order.
inline WmaxSet wmax_uniform(const Graph& g, int a, const Limits& limits = {}) {
  const std::size_t n = g.dimension();
  WmaxSet out{VectorSet(n), {}};
  if (a <= 0) {
    out.vectors.insert(WeightVector(n));
    out.certificates.emplace(WeightVector(n), Certificate{});
    return out;
  }
  const VectorSet mis = enumerate_mis(g);
  const std::vector<WeightVector> family(mis.begin(), mis.end());

  std::vector<std::size_t> picks;  // non-decreasing indices into family
  WeightVector sum(n);
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (picks.size() == static_cast<std::size_t>(a)) {
      if (out.vectors.insert(sum)) {
        Certificate cert;
        for (std::size_t i = 0; i < picks.size(); ++i) {
          cert[static_cast<Color>(i + 1)] = support(family[picks[i]]);
        }
        out.certificates.emplace(sum, std::move(cert));
        detail::check_vector_cap(out.vectors.size(), limits, "wmax_uniform");
      }
      return;
    }
    for (std::size_t k = from; k < family.size(); ++k) {
      picks.push_back(k);
      sum += family[k];
      self(self, k);
      sum = sum - family[k];
      picks.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

struct PermissibleWitness {
  WeightVector vector;
  Certificate certificate;
};

/// Dominating member of W_max with its certificate, or nullopt if w is not
/// permissible. The zero vector is always permissible.
inline std::optional<PermissibleWitness> permissible_witness(const Graph& g, const ListAssignment& lists,
                                                             const WeightVector& w, const Limits& limits = {}) {
  if (w.size() != g.dimension()) throw DimensionMismatch(g.dimension(), w.size());
  if (all_colors(lists).empty()) {
    if (w.is_zero()) return PermissibleWitness{w, {}};
    return std::nullopt;
  }
  auto set = wmax(g, lists, {false, limits});
  auto hit = in_hyperrectangle(w, set.vectors);
  if (!hit) return std::nullopt;
  return PermissibleWitness{*hit, set.certificate(*hit)};
}

inline std::optional<WeightVector> is_permissible(const Graph& g, const ListAssignment& lists, const WeightVector& w,
                                                  const Limits& limits = {}) {
  auto witness = permissible_witness(g, lists, w, limits);
  if (!witness) return std::nullopt;
  return witness->vector;
}

inline std::optional<WeightVector> is_permissible(const Instance& inst, const Limits& limits = {}) {
  return is_permissible(inst.graph, inst.lists, inst.weight(), limits);
}

/// Every certificate whose indicator vectors sum exactly to `target`, in
/// lexicographic order of the per-color choices.
inline std::vector<Certificate> all_certificates(const std::vector<ColorFamily>& families, const WeightVector& target,
                                                 const Limits& limits = {}) {
  const std::size_t n = target.size();
  // capacity[k][v]: how many of families[k..] can still cover v.
  std::vector<WeightVector> capacity(families.size() + 1, WeightVector(n));
  for (std::size_t k = families.size(); k-- > 0;) {
    capacity[k] = capacity[k + 1];
    for (Vertex v : families[k].subgraph.vertices()) capacity[k][v] += 1;
  }

  std::vector<Certificate> out;
  Certificate partial;
  WeightVector sum(n);
  detail::BranchBudget budget(limits, "all_certificates");
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    budget.tick();
    if (k == families.size()) {
      if (sum == target) out.push_back(partial);
      return;
    }
    for (const auto& s : families[k].sets) {
      WeightVector next = sum + s;
      if (!leq(next, target)) continue;
      if (!leq(target, next + capacity[k + 1])) continue;
      partial[families[k].color] = support(s);
      std::swap(sum, next);
      self(self, k + 1);
      std::swap(sum, next);
      partial.erase(families[k].color);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace multicolor
