#include "cq/cliffordgr/graded_clifford.hpp"

namespace cq {

namespace {

QMatrix sym3(std::initializer_list<long> upper) {
  // a11 a12 a13 a22 a23 a33
  std::vector<long> u(upper);
  QMatrix m(3, 3);
  m(0, 0) = u[0];
  m(0, 1) = m(1, 0) = u[1];
  m(0, 2) = m(2, 0) = u[2];
  m(1, 1) = u[3];
  m(1, 2) = m(2, 1) = u[4];
  m(2, 2) = u[5];
  return m;
}

}  // namespace

GradedCliffordAlgebra::GradedCliffordAlgebra(std::array<QMatrix, 3> m) : m_(std::move(m)) {
  for (const auto& x : m_)
    if (x.rows() != 3 || x.cols() != 3 || !x.is_symmetric())
      fail(ErrorCode::InvalidInput, "Clifford data must be symmetric 3x3 matrices");
}

NetOfConics GradedCliffordAlgebra::net() const {
  const Rat half(1, 2);
  return NetOfConics({m_[0].scaled(half), m_[1].scaled(half), m_[2].scaled(half)});
}

GradedCliffordAlgebra GradedCliffordAlgebra::from_net(const NetOfConics& net) {
  return GradedCliffordAlgebra({net.gram(0).scaled(Rat(2)), net.gram(1).scaled(Rat(2)), net.gram(2).scaled(Rat(2))});
}

std::vector<NCRelation> CliffordRelations::all() const {
  std::vector<NCRelation> out = anticommutators;
  out.insert(out.end(), xy_commutators.begin(), xy_commutators.end());
  out.insert(out.end(), yy_commutators.begin(), yy_commutators.end());
  return out;
}

CliffordRelations relations(const GradedCliffordAlgebra& g) {
  CliffordRelations r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      NCRelation rel;
      rel.terms.push_back({Rat(1), {i, j}});
      rel.terms.push_back({Rat(1), {j, i}});
      for (int m = 0; m < 3; ++m) {
        const Rat& c = g.matrices()[static_cast<std::size_t>(m)](static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (sgn(c) != 0) rel.terms.push_back({Rat(-c), {3 + m}});
      }
      r.anticommutators.push_back(std::move(rel));
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.xy_commutators.push_back({{{Rat(1), {i, 3 + j}}, {Rat(-1), {3 + j, i}}}});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) r.yy_commutators.push_back({{{Rat(1), {3 + i, 3 + j}}, {Rat(-1), {3 + j, 3 + i}}}});
  return r;
}

std::vector<std::size_t> hilbert_function(const GradedCliffordAlgebra& g, int n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "negative degree bound");
  if (n > 8) fail(ErrorCode::DegreeBoundExceeded, "Hilbert function is computed through degree 8");
  return GradedQuotient({1, 1, 1, 2, 2, 2}, relations(g).all(), n).hilbert();
}

PlaneCubic point_scheme_cubic(const GradedCliffordAlgebra& g) {
  std::array<std::array<MultiPoly, 3>, 3> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      MultiPoly e(y_vars());
      for (std::size_t k = 0; k < 3; ++k) e = e + MultiPoly::variable(y_vars(), k).scaled(g.matrices()[k](i, j));
      m[i][j] = e;
    }
  const MultiPoly d = det3(m);
  if (d.is_zero()) fail(ErrorCode::IdenticallyZero, "point scheme determinant vanishes");
  return PlaneCubic(d);
}

GradedCliffordAlgebra sklyanin_net(const Rat& c) {
  const Rat c3 = c * c * c;
  if (sgn(c) == 0 || c3 == 8 || c3 == -1) fail(ErrorCode::ExcludedParameter, "c must avoid 0, c^3 = 8 and c^3 = -1");
  QMatrix m1(3, 3), m2(3, 3), m3(3, 3);
  m1(0, 0) = 2;
  m1(1, 2) = m1(2, 1) = c;
  m2(1, 1) = 2;
  m2(0, 2) = m2(2, 0) = c;
  m3(2, 2) = 2;
  m3(0, 1) = m3(1, 0) = c;
  return GradedCliffordAlgebra({m1, m2, m3});
}

SpecialNets special_nets() {
  return {GradedCliffordAlgebra({sym3({2, 0, 0, 0, 1, 0}), sym3({0, 0, 1, 2, 0, 0}), sym3({0, 0, 0, 0, 0, 2})}),
          GradedCliffordAlgebra({sym3({2, 0, 0, 0, 1, 0}), sym3({0, 0, 0, 2, 0, 0}), sym3({0, 0, 0, 0, 0, 2})}),
          GradedCliffordAlgebra({sym3({2, 0, 0, 0, 0, 0}), sym3({0, 0, 0, 2, 0, 0}), sym3({0, 0, 0, 0, 0, 2})})};
}

}  // namespace cq
