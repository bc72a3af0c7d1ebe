#pragma once

#include <cstddef>
#include <string>

#include "errors.hpp"

namespace multicolor {

/// Resource guards shared by the solver and the brute-force oracle.
struct Limits {
  /// Cap on the size of any intermediate vector set (W_max construction, sums).
  std::size_t max_vectors = 1'000'000;
  /// Cap on visited search nodes in the backtracking routines.
  std::size_t max_branches = 10'000'000;
};

namespace detail {

inline void check_vector_cap(std::size_t size, const Limits& limits, const char* what) {
  if (size > limits.max_vectors) {
    throw ResourceLimitExceeded(std::string(what) + ": more than " +
                                std::to_string(limits.max_vectors) + " vectors");
  }
}

/// Counts search nodes against Limits::max_branches.
class BranchBudget {
 public:
  BranchBudget(const Limits& limits, const char* what) : max_(limits.max_branches), what_(what) {}

  void tick() {
    if (++used_ > max_) {
      throw ResourceLimitExceeded(std::string(what_) + ": more than " + std::to_string(max_) +
                                  " search branches");
    }
  }

  std::size_t used() const { return used_; }

 private:
  std::size_t max_;
  std::size_t used_ = 0;
  const char* what_;
};

}  // namespace detail
}  // namespace multicolor
