#pragma once

#include <vector>

#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/rat.hpp"

namespace cq {

using Word = std::vector<int>;

// Homogeneous noncommutative relation: a rational combination of words in
// the generators. All words must have the same weighted degree.
struct NCRelation {
  std::vector<std::pair<Rat, Word>> terms;
};

// Degreewise model of T(V)/(relations) for a finite set of weighted
// generators. Each graded piece H_d is a quotient of
//   U_d = (+)_g H_{d - deg g} (x) g
// by the image of H_{d - deg r} * r, so only finite linear algebra is used.
class GradedQuotient {
 public:
  GradedQuotient(std::vector<int> generator_degrees, std::vector<NCRelation> relations, int max_degree);

  int max_degree() const { return max_degree_; }
  std::size_t num_generators() const { return gen_deg_.size(); }
  int generator_degree(int g) const { return gen_deg_.at(static_cast<std::size_t>(g)); }
  std::size_t dim(int d) const;
  std::vector<std::size_t> hilbert() const;

  // Coordinates of the class of a word in H_{deg word}.
  std::vector<Rat> reduce_word(const Word& w) const;
  std::vector<Rat> reduce_relation(const NCRelation& r) const;
  // Right multiplication H_d -> H_{d + deg g}.
  const QMatrix& right_multiplication(int d, int g) const;

 private:
  struct Piece {
    std::size_t dim = 0;
    std::vector<std::size_t> block_offset;  // per generator, into U_d
    std::size_t u_dim = 0;
    RrefResult<Rat> image;                  // rref of the relation image in U_d
    std::vector<std::size_t> free_coords;   // U_d coordinates that form a basis of H_d
    std::vector<QMatrix> mult;              // per generator: H_{d - deg g} -> H_d
  };
  int word_degree(const Word& w) const;
  std::vector<Rat> project(int d, std::vector<Rat> u) const;
  std::vector<Rat> multiply_into_u(int d, const std::vector<Rat>& h, int h_degree, const Word& w) const;

  std::vector<int> gen_deg_;
  std::vector<NCRelation> rels_;
  std::vector<int> rel_deg_;
  int max_degree_;
  std::vector<Piece> pieces_;
};

// Subspace of H_d spanned by words in the given subset of generators.
std::vector<std::size_t> subalgebra_span_dims(const GradedQuotient& h, const std::vector<int>& generators);

}  // namespace cq
