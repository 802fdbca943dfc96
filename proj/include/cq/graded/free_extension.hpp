#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/multipoly.hpp"

namespace cq {

// S = Q[z_1..z_m] as a module over R = Q[w_1..w_m], where w_k acts as
// multiplication by g_k. The g_k are homogeneous of one common degree e and
// must form a regular sequence, so S is free over R of rank e^m with basis
// lifting a basis of A = S/(g).
class FreeExtension {
 public:
  explicit FreeExtension(std::vector<MultiPoly> g);

  std::size_t nvars() const { return g_.size(); }
  int relation_degree() const { return e_; }
  int socle_degree() const { return sigma_; }
  const std::vector<MultiPoly>& generators() const { return g_; }
  const std::vector<std::string>& base_vars() const { return w_vars_; }
  const std::vector<std::string>& vars() const { return g_.front().vars(); }

  const std::vector<MultiPoly>& basis() const { return basis_; }
  const std::vector<int>& basis_degrees() const { return basis_deg_; }
  std::vector<std::size_t> basis_indices_of_degree(int d) const;
  std::size_t socle_index() const;
  std::vector<std::size_t> quotient_hilbert() const;

  // Replaces the basis; the new elements must be homogeneous and project to
  // a basis of A in every degree.
  void set_basis(std::vector<MultiPoly> basis);

  // Unique R-coefficients c_i with p = sum_i c_i(g) b_i.
  std::vector<MultiPoly> coordinates(const MultiPoly& p) const;
  // R-coefficient of the socle basis element.
  MultiPoly trace(const MultiPoly& p) const;
  // Elements b_i^* of degree socle - deg b_i with trace(b_j b_i^*) = delta_ij.
  std::vector<MultiPoly> dual_basis() const;

  // The image g^a of an R-monomial in S.
  MultiPoly base_monomial(const Exponent& a) const;
  MultiPoly base_polynomial(const MultiPoly& r) const;

 private:
  struct DegreeSolver {
    std::vector<Exponent> monomials;
    std::vector<std::pair<std::size_t, Exponent>> labels;
    QMatrix inverse;
  };
  const DegreeSolver& solver(int d) const;

  std::vector<MultiPoly> g_;
  int e_ = 0;
  int sigma_ = 0;
  std::vector<std::string> w_vars_;
  std::vector<MultiPoly> basis_;
  std::vector<int> basis_deg_;
  mutable std::mutex mu_;
  mutable std::map<int, DegreeSolver> solvers_;
  mutable std::map<Exponent, MultiPoly> powers_;
};

// Dimensions of (Q[z]/(polys))_k for k = 0..max_degree, by degreewise
// linear algebra on the ideal.
std::vector<std::size_t> quotient_hilbert_function(const std::vector<MultiPoly>& polys, int max_degree);

// Homogeneous part of degree d.
MultiPoly homogeneous_part(const MultiPoly& p, int d);

}  // namespace cq
