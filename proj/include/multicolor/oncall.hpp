#pragma once

// On-call problem: for a demand w with no coloring, the permissible w* <= w
// closest to w in l1 norm are exactly the maximum-norm members of
// { min(w, w') : w' in W_max(G, L) }.

#include <algorithm>
#include <vector>

#include "coloring.hpp"
#include "instance.hpp"
#include "limits.hpp"
#include "permissible.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

struct OncallResult {
  /// Sorted lexicographically.
  VectorSet solutions;
  /// colorings[i] is a valid coloring of weight equal to the i-th solution.
  std::vector<Coloring> colorings;
  /// True when w itself was permissible and is returned unchanged.
  bool already_permissible = false;
};

inline OncallResult oncall_solutions(const Instance& inst, const Limits& limits = {}) {
  const WeightVector& w = inst.weight();
  // Computed over the unpruned W_max.
  const WmaxSet set = wmax(inst, {false, limits});

  OncallResult out;
  out.solutions = VectorSet(inst.size());
  if (auto hit = in_hyperrectangle(w, set.vectors)) {
    out.already_permissible = true;
    out.solutions.insert(w);
    out.colorings.push_back(coloring_from_witness(inst, {*hit, set.certificate(*hit)}, w));
    return out;
  }

  WeightVector::value_type best = -1;
  for (const auto& v : set.vectors) best = std::max(best, norm(vec_min(w, v)));
  for (const auto& v : set.vectors) {
    auto m = vec_min(w, v);
    if (norm(m) == best) out.solutions.insert(std::move(m));
  }
  for (const auto& s : out.solutions) {
    auto hit = in_hyperrectangle(s, set.vectors);
    out.colorings.push_back(coloring_from_witness(inst, {*hit, set.certificate(*hit)}, s));
  }
  return out;
}

}  // namespace multicolor
