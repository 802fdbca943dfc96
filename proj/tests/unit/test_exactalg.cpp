#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cq/exactalg/binaryform.hpp"
#include "cq/exactalg/factor.hpp"
#include "cq/exactalg/json_io.hpp"
#include "cq/exactalg/multipoly.hpp"
#include "cq/exactalg/numberfield.hpp"

using namespace cq;

namespace {

QMatrix qm(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rat>> r;
  for (auto& row : rows) {
    std::vector<Rat> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return QMatrix::from_rows(r, r.front().size());
}

QPoly expand(const Factorization& f) {
  QPoly p = QPoly::constant(f.unit);
  for (const auto& [g, m] : f.factors) p = p * g.pow(m);
  return p;
}

QPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
  if (sgn(c.back()) == 0) c.back() = 1;
  return QPoly(c, Rat(0));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-7")) == "-7");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(parse_rat("1/-2"), Error);
}

TEST_CASE("rref examples") {
  auto id = QMatrix::identity(3, Rat(0));
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 3);

  QMatrix z(2, 3);
  CHECK(rref(z).rank == 0);
  CHECK(rref(z).reduced == z);

  auto r2 = rref(qm({{1, 2}, {2, 4}}));
  CHECK(r2.reduced == qm({{1, 2}, {0, 0}}));
  CHECK(r2.rank == 1);
  CHECK(r2.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples and rank-nullity") {
  CHECK(kernel_basis(QMatrix::identity(3, Rat(0)), Rat(0)).empty());
  CHECK(kernel_basis(QMatrix(1, 2), Rat(0)).size() == 2);
  auto row = qm({{1, 1, 1}});
  auto k = kernel_basis(row, Rat(0));
  REQUIRE(k.size() == 2);
  for (auto& v : k) CHECK(row.apply(v)[0] == 0);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int t = 0; t < 30; ++t) {
    QMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = d(rng);
    auto rr = rref(m);
    CHECK(rref(rr.reduced).reduced == rr.reduced);
    CHECK(rr.rank + kernel_basis(m, Rat(0)).size() == 5);
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(qpoly({-1, 1}), qpoly({-2, 1})) == 1);
  CHECK(resultant(qpoly({0, 0, 1}), qpoly({0, 1})) == 0);
  CHECK(resultant(qpoly({1, 0, 1}), qpoly({1, 0, 1})) == 0);
  CHECK_THROWS_AS(resultant(QPoly(Rat(0)), QPoly(Rat(0))), Error);
}

TEST_CASE("squarefree decomposition examples") {
  auto s1 = squarefree_decomposition(qpoly({0, 0, -1, 1}));
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].first == qpoly({-1, 1}));
  CHECK(s1[0].second == 1);
  CHECK(s1[1].first == qpoly({0, 1}));
  CHECK(s1[1].second == 2);

  auto s2 = squarefree_decomposition(qpoly({-5, 1}));
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].second == 1);

  auto s3 = squarefree_decomposition(qpoly({1, 0, 1}).pow(3));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].first == qpoly({1, 0, 1}));
  CHECK(s3[0].second == 3);
  CHECK_THROWS_AS(squarefree_decomposition(QPoly(Rat(0))), Error);
}

TEST_CASE("factorization examples") {
  auto f = factor_rationals(qpoly({-1, 0, 0, 0, 1}));
  CHECK(f.factors.size() == 3);
  CHECK(expand(f) == qpoly({-1, 0, 0, 0, 1}));
  for (auto& [g, m] : f.factors) CHECK(m == 1);

  auto g = factor_rationals(qpoly({1, 0, 1}));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].first == qpoly({1, 0, 1}));

  auto h = factor_rationals(QPoly::monomial(Rat(1), 6));
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].first == qpoly({0, 1}));
  CHECK(h.factors[0].second == 6);

  CHECK_THROWS_AS(factor_rationals(QPoly::monomial(Rat(1), 13)), Error);
}

TEST_CASE("factorization of harder inputs") {
  // Swinnerton-Dyer polynomial x^4 - 10x^2 + 1 splits modulo every prime.
  auto sd = factor_rationals(qpoly({1, 0, -10, 0, 1}));
  CHECK(sd.factors.size() == 1);
  // (x^2-2)(x^2-3)(2x+1)^2
  QPoly p = qpoly({-2, 0, 1}) * qpoly({-3, 0, 1}) * qpoly({1, 2}).pow(2);
  auto fp = factor_rationals(p);
  CHECK(expand(fp) == p);
  CHECK(fp.factors.size() == 3);
  // x^12 - 1 has six cyclotomic factors.
  auto c12 = factor_rationals(QPoly::monomial(Rat(1), 12) - qpoly({1}));
  CHECK(c12.factors.size() == 6);
}

TEST_CASE("factorization re-expands and resultant detects common factors") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    QPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    QPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    QPoly c = random_poly(rng, 1 + static_cast<int>(rng() % 2));
    QPoly p = a * c, q = (t % 2 == 0) ? b * c : b;
    CHECK(expand(factor_rationals(p)) == p);
    const bool common = gcd(p, q).degree() > 0;
    CHECK((resultant(p, q) == 0) == common);
    auto fp = factor_rationals(p), fq = factor_rationals(q);
    bool shared = false;
    for (auto& x : fp.factors)
      for (auto& y : fq.factors) shared = shared || x.first == y.first;
    CHECK(shared == common);
    for (auto& [g, m] : squarefree_decomposition(p)) CHECK(gcd(g, g.derivative()).degree() == 0);
  }
}

TEST_CASE("rational roots") {
  auto r = rational_roots(qpoly({-6, 1, 1}));  // (x+3)(x-2)
  CHECK(r.size() == 2);
}

TEST_CASE("number field arithmetic and gcd") {
  auto K = NumberField::make(qpoly({-2, 0, 1}));
  auto th = NFElem::generator(K);
  CHECK(th * th == NFElem(K, Rat(2)));
  CHECK((th.inverse() * th) == NFElem(K, Rat(1)));
  NFPoly p(std::vector<NFElem>{-(th * th), NFElem(K, 0), NFElem(K, 1)}, NFElem(K, 0));
  NFPoly q(std::vector<NFElem>{-th, NFElem(K, 1)}, NFElem(K, 0));
  CHECK(gcd_over_field(p, q, K) == q);
  CHECK(gcd_over_field(p, NFPoly(NFElem(K, 0)), K) == p.monic());
  NFPoly l1(std::vector<NFElem>{NFElem(K, 1), NFElem(K, 1)}, NFElem(K, 0));
  NFPoly l2(std::vector<NFElem>{NFElem(K, 2), NFElem(K, 1)}, NFElem(K, 0));
  CHECK(gcd_over_field(l1, l2, K).degree() == 0);
  CHECK_THROWS_AS(NumberField::make(qpoly({-1, 0, 1})), Error);
}

TEST_CASE("binary forms") {
  QBinaryForm x4(4, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(root_multiplicity_partition(x4) == std::vector<int>{4});
  QBinaryForm xy3(4, {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(root_multiplicity_partition(xy3) == std::vector<int>{3, 1});
  CHECK(xy3.multiplicity_at_infinity() == 3);
  CHECK(binary_discriminant(x4) == 0);
  QBinaryForm gen(2, {Rat(-1), Rat(0), Rat(1)});
  CHECK(binary_discriminant(gen) != 0);
  auto s = gen.substitute(Rat(1), Rat(1), Rat(0), Rat(1));  // (x+y)^2 - y^2
  CHECK(s == QBinaryForm(2, {Rat(0), Rat(2), Rat(1)}));
}

TEST_CASE("multivariate polynomials and JSON") {
  std::vector<std::string> v{"x", "y", "z"};
  auto x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1);
  auto p = (x + y).pow(2);
  CHECK(p.coeff({1, 1, 0}) == 2);
  CHECK(p.is_homogeneous(2));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(gram_of_quadratic(p)(0, 1) == 1);
  auto j = multipoly_to_json(p);
  CHECK(multipoly_from_json(j) == p);
  auto m = qm({{1, 2}, {3, 4}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(rat_from_json(Json("3/6")) == Rat(1, 2));
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), Error);
}
