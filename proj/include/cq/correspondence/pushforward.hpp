#pragma once

#include <vector>

#include "cq/pencils/pencil.hpp"

namespace cq {

// Graded module over Q[w1, w2] whose component n is the binary forms of
// degree 4n + d, with w_k acting as multiplication by f_k.
class PushforwardModule {
 public:
  PushforwardModule(const BinaryQuarticPencil& p, int twist);

  int twist() const { return d_; }
  std::size_t component_dim(int n) const;
  // Number of minimal generators in each degree, starting at lowest_degree().
  int lowest_degree() const { return low_; }
  const std::vector<std::size_t>& generator_counts() const { return gens_; }
  // Degrees of the line bundles in the splitting, sorted descending.
  const std::vector<int>& splitting() const { return split_; }

 private:
  int d_;
  int low_;
  std::vector<std::size_t> gens_;
  std::vector<int> split_;
};

std::vector<int> pushforward_splitting(const BinaryQuarticPencil& p, int twist);

// O(n)^(i+1) + O(n-1)^(3-i) for twist 4n + i.
std::vector<int> expected_splitting(int twist);

}  // namespace cq
