#pragma once

// Non-negative integer vectors indexed by the canonical vertex order, with the
// componentwise partial order, the l1 norm, componentwise minimum, indicator
// vectors, vectorial (Minkowski) sums and hyperrectangle membership.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"

namespace multicolor {

using Vertex = std::size_t;

class WeightVector {
 public:
  using value_type = std::int64_t;

  WeightVector() = default;
  explicit WeightVector(std::size_t dimension) : coords_(dimension, 0) {}
  WeightVector(std::initializer_list<value_type> coords) : WeightVector(std::vector<value_type>(coords)) {}
  explicit WeightVector(std::vector<value_type> coords) : coords_(std::move(coords)) {
    for (auto c : coords_) {
      if (c < 0) throw InputError("weight vector entries must be non-negative");
    }
  }

  std::size_t size() const { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<value_type>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
  }

  // Lexicographic; used for ordering sets, not the dominance order (see leq).
  auto operator<=>(const WeightVector&) const = default;

  WeightVector& operator+=(const WeightVector& other) {
    require_same(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
  }

  friend WeightVector operator+(WeightVector lhs, const WeightVector& rhs) { return lhs += rhs; }

  /// Requires rhs <= lhs componentwise.
  friend WeightVector operator-(const WeightVector& lhs, const WeightVector& rhs) {
    lhs.require_same(rhs);
    WeightVector out(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (rhs[i] > lhs[i]) throw PreconditionError("vector difference would be negative");
      out[i] = lhs[i] - rhs[i];
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  void require_same(const WeightVector& other) const {
    if (other.size() != size()) throw DimensionMismatch(size(), other.size());
  }

  std::vector<value_type> coords_;
};

/// Partial order: x <= y iff x_i <= y_i for every i.
inline bool leq(const WeightVector& x, const WeightVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

inline WeightVector::value_type norm(const WeightVector& x) {
  return std::accumulate(x.begin(), x.end(), WeightVector::value_type{0});
}

inline WeightVector vec_min(const WeightVector& x, const WeightVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
  WeightVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

inline WeightVector indicator(std::span<const Vertex> members, std::size_t dimension) {
  WeightVector out(dimension);
  for (Vertex v : members) {
    if (v >= dimension) {
      throw InputError("indicator: index " + std::to_string(v) + " out of range " +
                       std::to_string(dimension));
    }
    out[v] = 1;
  }
  return out;
}

/// Indices of the non-zero coordinates, ascending.
inline std::vector<Vertex> support(const WeightVector& x) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) out.push_back(i);
  }
  return out;
}

/// Deduplicated set of vectors of one common dimension, iterated in
/// lexicographic order.
class VectorSet {
 public:
  using container = std::set<WeightVector>;
  using const_iterator = container::const_iterator;

  VectorSet() = default;
  explicit VectorSet(std::size_t dimension) : dimension_(dimension) {}
  VectorSet(std::initializer_list<WeightVector> vectors) {
    for (const auto& v : vectors) insert(v);
  }

  /// Returns true if the vector was not already present.
  bool insert(WeightVector v) {
    if (!dimension_) {
      dimension_ = v.size();
    } else if (*dimension_ != v.size()) {
      throw DimensionMismatch(*dimension_, v.size());
    }
    return items_.insert(std::move(v)).second;
  }

  bool contains(const WeightVector& v) const { return items_.count(v) != 0; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::optional<std::size_t> dimension() const { return dimension_; }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const WeightVector& front() const { return *items_.begin(); }

  bool operator==(const VectorSet& other) const { return items_ == other.items_; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& v : items_) {
      if (!first) s += ',';
      first = false;
      s += v.to_string();
    }
    return s + "}";
  }

 private:
  std::optional<std::size_t> dimension_;
  container items_;
};

/// { x_1 + ... + x_k : x_j in sets[j] }.
inline VectorSet vectorial_sum(std::span<const VectorSet> sets, const Limits& limits = {}) {
  if (sets.empty()) throw PreconditionError("vectorial_sum: empty input sequence");
  for (const auto& s : sets) {
    if (s.empty()) throw PreconditionError("vectorial_sum: empty operand");
    if (*s.dimension() != *sets.front().dimension()) {
      throw DimensionMismatch(*sets.front().dimension(), *s.dimension());
    }
  }
  VectorSet acc = sets.front();
  for (std::size_t k = 1; k < sets.size(); ++k) {
    VectorSet next;
    for (const auto& x : acc) {
      for (const auto& y : sets[k]) {
        next.insert(x + y);
        detail::check_vector_cap(next.size(), limits, "vectorial_sum");
      }
    }
    acc = std::move(next);
  }
  return acc;
}

/// Lexicographically first x in X with w <= x, if any. Absence means w is
/// outside the hyperrectangle R(X).
inline std::optional<WeightVector> in_hyperrectangle(const WeightVector& w, const VectorSet& X) {
  for (const auto& x : X) {
    if (leq(w, x)) return x;
  }
  return std::nullopt;
}

/// Drops every member dominated by another member; R(result) == R(X).
inline VectorSet prune_dominated(const VectorSet& X) {
  // Sort by norm descending: a vector can only be dominated by one of at least
  // its norm, and strictly dominated by one of strictly larger norm.
  std::vector<const WeightVector*> order;
  order.reserve(X.size());
  for (const auto& x : X) order.push_back(&x);
  std::stable_sort(order.begin(), order.end(),
                   [](const WeightVector* a, const WeightVector* b) { return norm(*a) > norm(*b); });
  std::vector<const WeightVector*> kept;
  for (const auto* x : order) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const WeightVector* k) { return leq(*x, *k); });
    if (!dominated) kept.push_back(x);
  }
  VectorSet out;
  if (X.dimension()) out = VectorSet(*X.dimension());
  for (const auto* k : kept) out.insert(*k);
  return out;
}

}  // namespace multicolor
