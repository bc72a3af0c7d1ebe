#pragma once

// (L,w)-colorings: validation, per-color decomposition, assembly of maximal
// colorings from certificates, shrinking to subcolorings, and enumeration of
// every coloring of a permissible weight.
//
// Every coloring of weight w is obtained from some maximal coloring C' of a
// weight w' >= w in W_max by deleting w'(v) - w(v) colors at each vertex, and
// every such deletion yields a coloring of weight w. Enumeration walks that
// union and suppresses repeats with a seen-set.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coloring_value.hpp"
#include "instance.hpp"
#include "limits.hpp"
#include "mis.hpp"
#include "permissible.hpp"
#include "vector_algebra.hpp"

namespace multicolor {

struct ColoringReport {
  bool valid = true;
  std::vector<std::string> violations;

  explicit operator bool() const { return valid; }
};

/// Checks C(v) in L(v), |C(v)| = w(v), and disjointness across every edge.
inline ColoringReport is_valid_coloring(const Instance& inst, const Coloring& c) {
  const WeightVector& w = inst.weight();
  ColoringReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  if (c.size() != inst.size()) {
    fail("coloring has " + std::to_string(c.size()) + " vertices, instance has " + std::to_string(inst.size()));
    return report;
  }
  for (Vertex v = 0; v < c.size(); ++v) {
    for (Color x : c[v]) {
      if (!inst.lists[v].count(x)) fail("vertex " + inst.names[v] + ": color " + std::to_string(x) + " not in list");
    }
    if (static_cast<WeightVector::value_type>(c[v].size()) != w[v]) {
      fail("vertex " + inst.names[v] + ": has " + std::to_string(c[v].size()) + " colors, weight " +
           std::to_string(w[v]));
    }
  }
  for (auto [u, v] : inst.graph.edges()) {
    for (Color x : c[u]) {
      if (c[v].count(x)) {
        fail("edge " + inst.names[u] + "-" + inst.names[v] + ": shares color " + std::to_string(x));
      }
    }
  }
  return report;
}

/// The x-color sublist C^x, stored as its weight vector (indicator of the
/// vertices carrying x).
struct ColorSublist {
  Color color;
  WeightVector indicator;

  bool contains(Vertex v) const { return indicator[v] != 0; }
};

/// {C^x} for every x in `palette` (colors of c itself when empty).
inline std::map<Color, ColorSublist> decompose(const Coloring& c, std::vector<Color> palette = {}) {
  if (palette.empty()) palette = c.colors();
  std::map<Color, ColorSublist> out;
  for (Color x : palette) out.emplace(x, ColorSublist{x, WeightVector(c.size())});
  for (Vertex v = 0; v < c.size(); ++v) {
    for (Color x : c[v]) {
      auto it = out.find(x);
      if (it == out.end()) throw UnknownColor(x);
      it->second.indicator[v] = 1;
    }
  }
  return out;
}

inline Coloring reassemble(const std::map<Color, ColorSublist>& sublists, std::size_t n) {
  Coloring out(n);
  for (const auto& [x, sub] : sublists) {
    if (sub.indicator.size() != n) throw DimensionMismatch(n, sub.indicator.size());
    for (Vertex v = 0; v < n; ++v) {
      if (sub.contains(v)) out[v].insert(x);
    }
  }
  return out;
}

/// C'(v) = { x : v in cert(x) }. Each cert entry must be a maximal
/// independent set of G^x and every color of L must be covered.
inline Coloring build_max_coloring(const Instance& inst, const Certificate& cert) {
  const auto palette = all_colors(inst.lists);
  for (const auto& [x, members] : cert) {
    if (!std::binary_search(palette.begin(), palette.end(), x)) throw UnknownColor(x);
  }
  Coloring out(inst.size());
  for (Color x : palette) {
    auto it = cert.find(x);
    if (it == cert.end()) throw PreconditionError("certificate misses color " + std::to_string(x));
    const Graph gx = color_subgraph(inst.graph, inst.lists, x);
    for (Vertex v : it->second) {
      if (!gx.contains(v)) {
        throw PreconditionError("certificate for color " + std::to_string(x) + " uses vertex " + inst.names.at(v) +
                                " outside G^x");
      }
    }
    if (!is_maximal_independent(gx, it->second)) {
      throw PreconditionError("certificate for color " + std::to_string(x) + " is not maximal independent in G^x");
    }
    for (Vertex v : it->second) out[v].insert(x);
  }
  return out;
}

/// Canonical member of C^-(C, d): at each vertex drop the d(v) largest
/// colors that are not in `keep`(v).
inline Coloring shrink(const Coloring& c, const WeightVector& d, const Coloring* keep = nullptr) {
  if (d.size() != c.size()) throw DimensionMismatch(c.size(), d.size());
  if (!leq(d, c.weight_vector())) throw PreconditionError("shrink: d exceeds the coloring's weight");
  if (keep && keep->size() != c.size()) throw DimensionMismatch(c.size(), keep->size());
  Coloring out = c;
  for (Vertex v = 0; v < c.size(); ++v) {
    auto remaining = d[v];
    for (auto it = c[v].rbegin(); it != c[v].rend() && remaining > 0; ++it) {
      if (keep && (*keep)[v].count(*it)) continue;
      out[v].erase(*it);
      --remaining;
    }
    if (remaining > 0) throw PreconditionError("shrink: protected colors leave too few to remove");
  }
  return out;
}

/// Lazily streams every member of C^-(C, d) exactly once. Per vertex the kept
/// subsets run in lexicographic order; the last vertex varies fastest.
class SubcoloringStream {
 public:
  SubcoloringStream(const Coloring& c, const WeightVector& d) {
    if (d.size() != c.size()) throw DimensionMismatch(c.size(), d.size());
    if (!leq(d, c.weight_vector())) throw PreconditionError("subcolorings: d exceeds the coloring's weight");
    for (Vertex v = 0; v < c.size(); ++v) {
      Slot slot{{c[v].begin(), c[v].end()}, {}};
      std::size_t keep = c[v].size() - static_cast<std::size_t>(d[v]);
      for (std::size_t i = 0; i < keep; ++i) slot.picked.push_back(i);
      slots_.push_back(std::move(slot));
    }
  }

  std::optional<Coloring> next() {
    if (done_) return std::nullopt;
    Coloring out(slots_.size());
    for (std::size_t v = 0; v < slots_.size(); ++v) {
      for (std::size_t i : slots_[v].picked) out[v].insert(slots_[v].colors[i]);
    }
    advance();
    return out;
  }

 private:
  struct Slot {
    std::vector<Color> colors;
    std::vector<std::size_t> picked;  // ascending indices into colors
  };

  static bool next_combination(std::vector<std::size_t>& picked, std::size_t n) {
    const std::size_t k = picked.size();
    for (std::size_t i = k; i-- > 0;) {
      if (picked[i] < n - k + i) {
        ++picked[i];
        for (std::size_t j = i + 1; j < k; ++j) picked[j] = picked[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  void advance() {
    for (std::size_t v = slots_.size(); v-- > 0;) {
      auto& slot = slots_[v];
      if (next_combination(slot.picked, slot.colors.size())) return;
      for (std::size_t i = 0; i < slot.picked.size(); ++i) slot.picked[i] = i;
    }
    done_ = true;
  }

  std::vector<Slot> slots_;
  bool done_ = false;
};

inline std::vector<Coloring> enumerate_subcolorings(const Coloring& c, const WeightVector& d) {
  SubcoloringStream stream(c, d);
  std::vector<Coloring> out;
  while (auto next = stream.next()) out.push_back(std::move(*next));
  return out;
}

/// Coloring of weight w from a dominating witness: assemble the maximal
/// coloring of the witness certificate, then shrink down to w.
inline Coloring coloring_from_witness(const Instance& inst, const PermissibleWitness& witness, const WeightVector& w) {
  Coloring full = build_max_coloring(inst, witness.certificate);
  return shrink(full, witness.vector - w);
}

/// Some valid coloring of inst's weight; NotPermissible if none exists.
inline Coloring find_coloring(const Instance& inst, const Limits& limits = {}) {
  const WeightVector& w = inst.weight();
  auto witness = permissible_witness(inst.graph, inst.lists, w, limits);
  if (!witness) throw NotPermissible("weight " + w.to_string() + " is not permissible");
  if (all_colors(inst.lists).empty()) return Coloring(inst.size());
  return coloring_from_witness(inst, *witness, w);
}

/// Streams the full set of (L,w)-colorings once each. Order is deterministic:
/// dominating vectors of W_max lexicographically, then their certificates,
/// then the subcolorings of each assembled maximal coloring.
class ColoringStream {
 public:
  ColoringStream(const Instance& inst, std::optional<std::size_t> limit = std::nullopt, const Limits& limits = {})
      : inst_(inst), w_(inst.weight()), limit_(limit), limits_(limits) {
    if (all_colors(inst.lists).empty()) {
      if (w_.is_zero()) trivial_ = Coloring(inst.size());
      return;
    }
    auto set = wmax(inst.graph, inst.lists, {false, limits});
    for (const auto& v : set.vectors) {
      if (leq(w_, v)) dominating_.push_back(v);
    }
    families_ = color_families(inst.graph, inst.lists);
  }

  std::optional<Coloring> next() {
    if (limit_ && emitted_ >= *limit_) return std::nullopt;
    if (trivial_) {
      auto out = std::move(trivial_);
      trivial_.reset();
      ++emitted_;
      return out;
    }
    while (true) {
      if (sub_) {
        while (auto c = sub_->next()) {
          if (seen_.insert(*c).second) {
            ++emitted_;
            return c;
          }
        }
        sub_.reset();
      }
      if (cert_index_ < certs_.size()) {
        Coloring full = build_max_coloring(inst_, certs_[cert_index_++]);
        sub_.emplace(full, current_ - w_);
        continue;
      }
      if (vector_index_ >= dominating_.size()) return std::nullopt;
      current_ = dominating_[vector_index_++];
      certs_ = all_certificates(families_, current_, limits_);
      cert_index_ = 0;
    }
  }

 private:
  Instance inst_;
  WeightVector w_;
  std::optional<std::size_t> limit_;
  Limits limits_;
  std::optional<Coloring> trivial_;
  std::vector<WeightVector> dominating_;
  std::vector<ColorFamily> families_;
  std::size_t vector_index_ = 0;
  WeightVector current_;
  std::vector<Certificate> certs_;
  std::size_t cert_index_ = 0;
  std::optional<SubcoloringStream> sub_;
  std::set<Coloring> seen_;
  std::size_t emitted_ = 0;
};

inline ColoringStream enumerate_colorings(const Instance& inst, std::optional<std::size_t> limit = std::nullopt,
                                          const Limits& limits = {}) {
  return ColoringStream(inst, limit, limits);
}

/// Drains a stream into a vector.
inline std::vector<Coloring> collect(ColoringStream stream) {
  std::vector<Coloring> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace multicolor
