#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cq/graded/free_extension.hpp"
#include "cq/graded/quotient_algebra.hpp"

using namespace cq;

namespace {

NCRelation commutator(int a, int b) { return {{{Rat(1), {a, b}}, {Rat(-1), {b, a}}}}; }

const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPoly var(std::size_t i) { return MultiPoly::variable(kXYZ, i); }

void check_free_extension(const FreeExtension& fe) {
  const auto& b = fe.basis();
  const auto dual = fe.dual_basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto t = fe.trace(b[j] * dual[i]);
      if (i == j) CHECK(t == MultiPoly::constant(fe.base_vars(), Rat(1)));
      else CHECK(t.is_zero());
    }
  const MultiPoly p = (var(0) + var(1).scaled(Rat(3)) - var(2)).pow(5) + var(0).pow(2) * var(2);
  const auto c = fe.coordinates(p);
  MultiPoly back(kXYZ);
  for (std::size_t i = 0; i < b.size(); ++i) back = back + fe.base_polynomial(c[i]) * b[i];
  CHECK(back == p);
}

}  // namespace

TEST_CASE("free associative algebra dimensions") {
  GradedQuotient free({1, 1}, {}, 6);
  CHECK(free.hilbert() == std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64});
}

TEST_CASE("commutative polynomial ring as a quotient") {
  GradedQuotient poly({1, 1, 1}, {commutator(0, 1), commutator(0, 2), commutator(1, 2)}, 6);
  CHECK(poly.hilbert() == std::vector<std::size_t>{1, 3, 6, 10, 15, 21, 28});
  CHECK(poly.reduce_word({0, 1, 2}) == poly.reduce_word({2, 1, 0}));
}

TEST_CASE("exterior algebra") {
  std::vector<NCRelation> rels;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) rels.push_back({{{Rat(1), {i, j}}, {Rat(1), {j, i}}}});
  GradedQuotient ext({1, 1, 1}, rels, 5);
  CHECK(ext.hilbert() == std::vector<std::size_t>{1, 3, 3, 1, 0, 0});
  auto a = ext.reduce_word({0, 1}), b = ext.reduce_word({1, 0});
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == -b[i]);
}

TEST_CASE("mixed generator degrees and generated subalgebra") {
  // x of degree 1 and a central y of degree 2 with x^2 = y.
  GradedQuotient h({1, 2}, {{{{Rat(1), {0, 0}}, {Rat(-1), {1}}}}, commutator(0, 1)}, 6);
  CHECK(h.hilbert() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1});
  CHECK(subalgebra_span_dims(h, {0}) == h.hilbert());
  CHECK_THROWS_AS(h.dim(7), Error);
}

TEST_CASE("free extension over the monomial regular sequence") {
  FreeExtension fe({var(0).pow(2), var(1).pow(2), var(2).pow(2)});
  CHECK(fe.socle_degree() == 3);
  CHECK(fe.quotient_hilbert() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(fe.trace(var(0) * var(1) * var(2)) == MultiPoly::constant(fe.base_vars(), Rat(1)));
  check_free_extension(fe);
}

TEST_CASE("free extension over a non-monomial sequence") {
  // x^2 + yz, y^2 + xz, z^2
  FreeExtension fe({var(0).pow(2) + var(1) * var(2), var(1).pow(2) + var(0) * var(2), var(2).pow(2)});
  check_free_extension(fe);
}

TEST_CASE("non-regular sequences are rejected") {
  CHECK_THROWS_AS(FreeExtension({var(0).pow(2), var(0) * var(1), var(1).pow(2)}), Error);
  CHECK(quotient_hilbert_function({var(0).pow(2), var(0) * var(1), var(1).pow(2)}, 3) ==
        std::vector<std::size_t>{1, 3, 3, 3});
}

TEST_CASE("binary quartic pencil as a free extension") {
  const std::vector<std::string> xy{"x", "y"};
  auto x = MultiPoly::variable(xy, 0), y = MultiPoly::variable(xy, 1);
  FreeExtension fe({x.pow(4), y.pow(4)});
  CHECK(fe.basis().size() == 16);
  CHECK(fe.quotient_hilbert() == std::vector<std::size_t>{1, 2, 3, 4, 3, 2, 1});
  const auto dual = fe.dual_basis();
  for (std::size_t i = 0; i < 16; ++i) CHECK(fe.trace(fe.basis()[i] * dual[i]).coeff({0, 0}) == 1);
}
