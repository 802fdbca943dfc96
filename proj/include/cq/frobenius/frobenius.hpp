#pragma once

#include <array>
#include <memory>
#include <vector>

#include "cq/graded/free_extension.hpp"
#include "cq/nets/net.hpp"

namespace cq {

// A = S/S R_{>=1} for S = Q[x,y,z] and R generated by the quadrics of a
// basepoint-free net. Basis e0..e7 lifted to S: e0 = 1, e1..e3 = x, y, z,
// e4..e6 trace-dual to e1..e3, e7 spanning the socle with trace(e7) = 1.
struct FrobeniusQuotient {
  std::array<QMatrix, 3> grams;
  std::shared_ptr<const FreeExtension> ext;
  std::vector<MultiPoly> basis;
  std::vector<int> degrees;
  // table[i][j] = coordinates of e_i e_j in A on the basis.
  std::vector<std::vector<std::vector<Rat>>> table;
  std::vector<std::size_t> hilbert;

  // Coordinates in A of a polynomial of S.
  std::vector<Rat> reduce(const MultiPoly& p) const;
  Rat trace(const std::vector<Rat>& a) const { return a.at(7); }
};

FrobeniusQuotient frobenius_quotient(const NetOfConics& net);

struct StructureConstants {
  // c[i][j][l] with e_i e_j = sum_l c[i][j][l] e_{l+4}, indices 0..2.
  std::array<std::array<std::array<Rat, 3>, 3>, 3> c;
  bool totally_symmetric = false;
};

StructureConstants structure_constants(const FrobeniusQuotient& a);

struct DualBases {
  std::vector<MultiPoly> e, f;
  bool delta_ok = false;          // trace(e_i f_j) = delta_ij in R
  bool normalization_ok = false;  // e0 = f7 = 1 and f4, f5, f6 = e1, e2, e3
  bool central_ok = false;        // sum e_i (x) f_i = sum f_i (x) e_i in S (x)_R S
};

DualBases dual_bases(const FrobeniusQuotient& a, int degree_bound);
DualBases dual_bases(const NetOfConics& net, int degree_bound);

struct AlphaBetaReport {
  QMatrix alpha;        // A1 -> Sym^2 A2, 6 x 3
  QMatrix lower_alpha;  // A1 -> A2^v -> Sym^2 A1^v, 6 x 3
  QMatrix middle;       // Sym^2 A2 -> Sym^2 A1^v from the trace pairing
  QMatrix beta;         // Sym^2 A2 -> V, 3 x 6
  QMatrix phi;          // Sym^2 A1^v -> V, 3 x 6
  Rat alpha_scalar;     // middle * alpha = alpha_scalar * lower_alpha
  bool alpha_square_commutes = false;
  bool beta_square_commutes = false;
  bool beta_alpha_zero = false;
  std::size_t rank_alpha = 0;
  std::size_t rank_beta = 0;
  bool passes() const {
    return alpha_square_commutes && beta_square_commutes && beta_alpha_zero && rank_alpha == 3 && rank_beta == 3;
  }
};

// Sym^2 of a 3-dimensional space uses the basis u_p u_q, p <= q, in the
// order (00, 01, 02, 11, 12, 22).
AlphaBetaReport alpha_beta_check(const FrobeniusQuotient& a);

struct CokerPhiReport {
  std::vector<long> coker_dims;  // degrees 0..N
  std::vector<long> omega_dims;
  bool equal = false;
};

// Degrees are those of S, with R generated in degree 2.
CokerPhiReport coker_phi_hilbert_check(const FrobeniusQuotient& a, int n);
CokerPhiReport coker_phi_hilbert_check(const NetOfConics& net, int n);

}  // namespace cq
