#pragma once

#include <string>
#include <vector>

#include "cq/exactalg/binaryform.hpp"
#include "cq/exactalg/matrix.hpp"

namespace cq {

enum class SegreType { S111, S21, S3, S11_1, S21_paren };

const char* segre_name(SegreType t);
int segre_singular_fibres(SegreType t);
int segre_double_lines(SegreType t);

// det(s A + t B) for 3x3 matrices, as coefficients of s^i t^(3-i).
template <class F>
BinaryForm<F> pencil_determinant(const Matrix<F>& a, const Matrix<F>& b) {
  // Interpolate through s/t values 0, 1, 2 and the leading term det(A).
  const F zero = zero_like(a(0, 0));
  std::vector<F> vals;
  for (int k = 0; k < 4; ++k) {
    const F s = embed(zero, Rat(k == 3 ? 1 : k)), t = embed(zero, Rat(k == 3 ? 0 : 1));
    Matrix<F> m(3, 3, zero);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = F(F(s * a(i, j)) + F(t * b(i, j)));
    vals.push_back(determinant(m));
  }
  // p(x) = sum c_i x^i with p(0), p(1), p(2) known and c_3 = det A.
  const F c0 = vals[0], c3 = vals[3];
  const F half = embed(zero, Rat(1, 2));
  // p(1) = c0 + c1 + c2 + c3, p(2) = c0 + 2c1 + 4c2 + 8c3
  const F r1 = F(F(vals[1] - c0) - c3);
  const F r2 = F(F(vals[2] - c0) - F(embed(zero, Rat(8)) * c3));
  const F c2 = F(F(r2 - F(embed(zero, Rat(2)) * r1)) * half);
  const F c1 = F(r1 - c2);
  return BinaryForm<F>(3, {c0, c1, c2, c3});
}

// Table of the five pencil types of plane conics, from the root structure
// of det(sA + tB) and the rank of the member at a repeated root.
template <class F>
SegreType segre_symbol_over(const Matrix<F>& a, const Matrix<F>& b) {
  {
    Matrix<F> both(2, 9, zero_like(a(0, 0)));
    for (std::size_t k = 0; k < 9; ++k) {
      both(0, k) = a(k / 3, k % 3);
      both(1, k) = b(k / 3, k % 3);
    }
    if (rank(both) < 2) fail(ErrorCode::DegeneratePencil, "A and B do not span a pencil");
  }
  const BinaryForm<F> d = pencil_determinant(a, b);
  if (d.is_zero()) fail(ErrorCode::DegeneratePencil, "det(sA+tB) vanishes identically");
  const F zero = zero_like(a(0, 0));
  auto member_rank = [&](const F& s, const F& t) {
    Matrix<F> m(3, 3, zero);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = F(F(s * a(i, j)) + F(t * b(i, j)));
    return rank(m);
  };
  // Repeated roots of a binary cubic are defined over the coefficient field.
  int mult = 0;
  F rs = zero, rt = zero;
  const int inf = d.multiplicity_at_infinity();
  if (inf >= 2) {
    mult = inf;
    rs = one_like(zero);
  } else {
    for (const auto& [h, m] : squarefree_decomposition(d.dehomogenize()))
      if (m >= 2) {
        mult = m;
        rs = F(-h.coeff(0));
        rt = one_like(zero);
      }
  }
  if (mult <= 1) return SegreType::S111;
  const std::size_t r = member_rank(rs, rt);
  if (mult == 2) return r == 1 ? SegreType::S11_1 : SegreType::S21;
  return r == 1 ? SegreType::S21_paren : SegreType::S3;
}

SegreType segre_symbol(const QMatrix& a, const QMatrix& b);

}  // namespace cq
