#pragma once

// The Coloring value type: a finite color set per vertex.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "instance.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n) : sets_(n) {}
  explicit Coloring(std::vector<ColorSet> sets) : sets_(std::move(sets)) {}
  Coloring(std::initializer_list<ColorSet> sets) : sets_(sets) {}

  std::size_t size() const { return sets_.size(); }
  const ColorSet& operator[](Vertex v) const { return sets_.at(v); }
  ColorSet& operator[](Vertex v) { return sets_.at(v); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  WeightVector weight_vector() const {
    WeightVector w(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) w[i] = static_cast<WeightVector::value_type>(sets_[i].size());
    return w;
  }

  /// Colors used anywhere, ascending.
  std::vector<Color> colors() const {
    ColorSet all;
    for (const auto& s : sets_) all.insert(s.begin(), s.end());
    return {all.begin(), all.end()};
  }

  /// Per-vertex containment: every color of `sub` at v is also at v here.
  bool contains(const Coloring& sub) const {
    if (sub.size() != size()) return false;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (!std::includes(sets_[i].begin(), sets_[i].end(), sub.sets_[i].begin(), sub.sets_[i].end())) return false;
    }
    return true;
  }

  auto operator<=>(const Coloring&) const = default;
  bool operator==(const Coloring&) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (i) s += ' ';
      s += '{';
      bool first = true;
      for (Color c : sets_[i]) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(c);
      }
      s += '}';
    }
    return s + "]";
  }

 private:
  std::vector<ColorSet> sets_;
};

/// Per-vertex union.
inline Coloring union_of(const Coloring& a, const Coloring& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  Coloring out = a;
  for (std::size_t v = 0; v < b.size(); ++v) out[v].insert(b[v].begin(), b[v].end());
  return out;
}

}  // namespace multicolor
