#pragma once

#include <vector>

#include "cq/exactalg/json_io.hpp"
#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/unipoly.hpp"
#include "cq/graded/quotient_algebra.hpp"

namespace cq {

// Structure constants of a commutative unital algebra on a basis d_0 = 1,
// d_1, ..., d_{n-1}: d_i d_j = sum_k table[i][j][k] d_k.
using MultTable = std::vector<std::vector<std::vector<Rat>>>;

struct FrobeniusPair {
  MultTable table;
  std::vector<Rat> lambda;  // Lambda(d_k)
  QMatrix gram;             // Lambda(d_i d_j)
  std::size_t dim() const { return table.size(); }
};

// Validates the table and finds Lambda. Throws NotFrobenius when the Gram
// determinant vanishes identically as a polynomial in Lambda.
FrobeniusPair make_frobenius_pair(const MultTable& table);
// Uses the given functional, which must be nondegenerate.
FrobeniusPair make_frobenius_pair(const MultTable& table, const std::vector<Rat>& lambda);

MultTable algebra_from_polynomial(const QPoly& monic);  // Q[u]/(p), basis 1, u, ..., u^{n-1}
MultTable split_algebra(std::size_t n);                 // Q^n, basis 1, e_1, ..., e_{n-1} with e_k idempotents
MultTable monomial_algebra(std::size_t vars, const std::vector<std::vector<int>>& basis_exponents);

// Coordinates of u * v.
std::vector<Rat> multiply(const MultTable& t, const std::vector<Rat>& u, const std::vector<Rat>& v);

struct PairDualBases {
  std::vector<std::vector<Rat>> e, f;  // coordinates on d_0..d_{n-1}
  QMatrix casimir;                     // sum_i e_i (x) f_i as an n x n coefficient matrix
  bool delta_ok = false;
  bool symmetric = false;
};

PairDualBases dual_bases_pair(const FrobeniusPair& p);
// Same with e given by the columns of an invertible change of basis.
PairDualBases dual_bases_pair(const FrobeniusPair& p, const QMatrix& basis_change);

struct PreprojectiveH {
  std::size_t generators = 0;           // n - 1
  std::vector<NCRelation> relations;    // a basis of the relation space
  QMatrix relation_matrix;              // rows: relations as (n-1)^2 tensors
  std::size_t relation_dim = 0;
  bool symmetric = false;
};

PreprojectiveH preprojective_H(const FrobeniusPair& p);
std::vector<std::size_t> hilbert_dims_H(const PreprojectiveH& h, int n);

struct CliffordComparison {
  std::size_t q_dim = 0;
  std::vector<std::size_t> h_dims;
  std::vector<std::size_t> clifford_dims;
  std::vector<std::size_t> bookkeeping_dims;  // (k+1) + 3k and 3(k+1) + k
  std::vector<std::size_t> image_dims;        // span of words in F inside the Clifford side
  bool relations_vanish = false;              // H -> Cl is well defined
  bool surjective = false;
  bool isomorphism = false;
};

CliffordComparison clifford_comparison(const FrobeniusPair& p, int n);

// One of {"table": t}, {"polynomial": monic coefficients, constant first},
// {"split": n} or {"monomial": {"vars": k, "basis": exponent list}}.
MultTable mult_table_from_json(const Json& j);
Json frobenius_pair_to_json(const FrobeniusPair& p);

}  // namespace cq
