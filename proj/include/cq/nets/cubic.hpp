#pragma once

#include <vector>

#include "cq/exactalg/multipoly.hpp"

namespace cq {

// Nonzero ternary cubic form.
class PlaneCubic {
 public:
  explicit PlaneCubic(MultiPoly f);
  const MultiPoly& poly() const { return f_; }
  MultiPoly gradient(std::size_t i) const { return f_.derivative(i); }

 private:
  MultiPoly f_;
};

using ProjPoint = std::vector<Rat>;

// Scales a nonzero point to primitive integer coordinates with the first
// nonzero entry positive.
ProjPoint normalize_point(const ProjPoint& p);
bool same_point(const ProjPoint& a, const ProjPoint& b);

// Rational common zeros in P^2 of a finite set of ternary forms whose common
// zero locus is finite. Uses resultants after a pseudorandom coordinate change.
std::vector<ProjPoint> rational_common_zeros(const std::vector<MultiPoly>& forms, unsigned seed = 7);

// Stabilized value of the Hilbert function of Q[y]/(forms), the degree of a
// zero-dimensional scheme. Returns -1 if no stabilization is seen by max_degree.
int stable_hilbert_value(const std::vector<MultiPoly>& forms, int max_degree = 10);

// Length of the scheme cut by the partial derivatives (singularity count for
// nodal curves).
int jacobian_degree(const PlaneCubic& c);

std::vector<ProjPoint> rational_singular_points(const PlaneCubic& c);

// True when the line through p and q is a component of the curve.
bool line_in_curve(const MultiPoly& f, const ProjPoint& p, const ProjPoint& q);

// f restricted to s*p + t*q, as coefficients of s^i t^(d-i).
std::vector<Rat> restrict_to_line(const MultiPoly& f, const ProjPoint& p, const ProjPoint& q);

struct IntersectionPoint {
  int multiplicity = 0;
  int field_degree = 1;   // conjugate points share one entry; this is their count
  bool singular = false;  // the gradient of the curve vanishes there
};

struct LineProfile {
  std::vector<int> partition;                // sorted descending, sums to 3
  std::vector<IntersectionPoint> points;
};

LineProfile line_intersection_profile(const PlaneCubic& c, const ProjPoint& p, const ProjPoint& q);

}  // namespace cq
