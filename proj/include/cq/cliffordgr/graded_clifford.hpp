#pragma once

#include <array>
#include <vector>

#include "cq/graded/quotient_algebra.hpp"
#include "cq/nets/net.hpp"

namespace cq {

// Generators x1, x2, x3 in degree 1 and central y1, y2, y3 in degree 2 with
// x_i x_j + x_j x_i = sum_m (M_m)_ij y_m.
class GradedCliffordAlgebra {
 public:
  explicit GradedCliffordAlgebra(std::array<QMatrix, 3> m);
  const std::array<QMatrix, 3>& matrices() const { return m_; }

  // The net with Gram matrices M_m / 2, so that q_m(v) = v^T (M_m / 2) v.
  NetOfConics net() const;
  static GradedCliffordAlgebra from_net(const NetOfConics& net);

 private:
  std::array<QMatrix, 3> m_;
};

// Word letters 0..2 are x1..x3 and 3..5 are y1..y3.
struct CliffordRelations {
  std::vector<NCRelation> anticommutators;  // 6
  std::vector<NCRelation> xy_commutators;   // 9
  std::vector<NCRelation> yy_commutators;   // 3
  std::vector<NCRelation> all() const;
};

CliffordRelations relations(const GradedCliffordAlgebra& g);

// Dimensions in degrees 0..n.
std::vector<std::size_t> hilbert_function(const GradedCliffordAlgebra& g, int n);

PlaneCubic point_scheme_cubic(const GradedCliffordAlgebra& g);

GradedCliffordAlgebra sklyanin_net(const Rat& c);

struct SpecialNets {
  GradedCliffordAlgebra b, d, e;
};
SpecialNets special_nets();

}  // namespace cq
