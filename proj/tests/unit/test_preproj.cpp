#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "cq/preproj/preproj.hpp"

using namespace cq;

namespace {

const std::vector<std::size_t> kOdd{1, 3, 5, 7, 9, 11, 13};

MultTable cyclic4() { return algebra_from_polynomial(qpoly({-1, 0, 0, 0, 1})); }
MultTable nilpotent4() { return algebra_from_polynomial(qpoly({0, 0, 0, 0, 1})); }
MultTable dual_numbers_squared() { return monomial_algebra(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

std::vector<Rat> unit(std::size_t n, std::size_t i) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = 1;
  return v;
}

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("Frobenius pairs are found or refuted") {
  auto c = make_frobenius_pair(cyclic4());
  CHECK(sgn(determinant(c.gram)) != 0);
  auto s = make_frobenius_pair(split_algebra(4));
  CHECK(sgn(determinant(s.gram)) != 0);
  auto given = make_frobenius_pair(cyclic4(), unit(4, 3));
  CHECK(given.lambda == unit(4, 3));

  expect_code(ErrorCode::NotFrobenius, [] { make_frobenius_pair(monomial_algebra(2, {{0, 0}, {1, 0}, {0, 1}})); });
  expect_code(ErrorCode::NotFrobenius,
              [] { make_frobenius_pair(monomial_algebra(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})); });

  MultTable bad = cyclic4();
  bad[1][2] = unit(4, 0);
  expect_code(ErrorCode::NotCommutative, [&] { make_frobenius_pair(bad); });
  bad[2][1] = unit(4, 0);
  expect_code(ErrorCode::NotAssociative, [&] { make_frobenius_pair(bad); });
}

TEST_CASE("dual bases of rank-4 pairs") {
  auto s = dual_bases_pair(make_frobenius_pair(split_algebra(4), {Rat(4), Rat(1), Rat(1), Rat(1)}));
  CHECK(s.delta_ok);
  CHECK(s.symmetric);

  auto n = make_frobenius_pair(nilpotent4(), unit(4, 3));
  auto d = dual_bases_pair(n);
  CHECK(d.delta_ok);
  CHECK(d.symmetric);
  for (std::size_t i = 0; i < 4; ++i) CHECK(d.f[i] == unit(4, 3 - i));
}

TEST_CASE("split algebra with idempotent basis has self-dual basis") {
  // Idempotent basis p0 = 1 - p1 - p2 - p3, p1, p2, p3 with Lambda(p_i) = 1.
  auto p = make_frobenius_pair(split_algebra(4), {Rat(4), Rat(1), Rat(1), Rat(1)});
  QMatrix change = QMatrix::identity(4, Rat(0));
  for (std::size_t k = 1; k < 4; ++k) change(k, 0) = -1;
  auto d = dual_bases_pair(p, change);
  CHECK(d.delta_ok);
  for (std::size_t i = 0; i < 4; ++i) CHECK(d.f[i] == d.e[i]);
}

TEST_CASE("relation space of H") {
  for (const auto& t : {split_algebra(4), cyclic4(), nilpotent4(), dual_numbers_squared()}) {
    auto h = preprojective_H(make_frobenius_pair(t));
    CHECK(h.generators == 3);
    CHECK(h.relation_dim == 4);
    CHECK(h.symmetric);
  }
}

TEST_CASE("the Casimir element does not depend on the basis") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (const auto& t : {split_algebra(4), cyclic4(), dual_numbers_squared()}) {
    auto p = make_frobenius_pair(t);
    const auto base = dual_bases_pair(p).casimir;
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix change(4, 4);
      do {
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) change(i, j) = dist(rng);
      } while (sgn(determinant(change)) == 0);
      CHECK(dual_bases_pair(p, change).casimir == base);
    }
  }
}

TEST_CASE("Hilbert function of H") {
  for (const auto& t : {split_algebra(4), cyclic4(), nilpotent4(), dual_numbers_squared()}) {
    auto h = preprojective_H(make_frobenius_pair(t));
    CHECK(hilbert_dims_H(h, 6) == kOdd);
    CHECK(hilbert_dims_H(h, 0) == std::vector<std::size_t>{1});
  }
  auto h = preprojective_H(make_frobenius_pair(cyclic4()));
  expect_code(ErrorCode::DegreeBoundExceeded, [&] { hilbert_dims_H(h, 9); });
}

TEST_CASE("comparison with the Clifford algebra") {
  for (const auto& t : {split_algebra(4), cyclic4(), dual_numbers_squared()}) {
    auto c = clifford_comparison(make_frobenius_pair(t), 6);
    CHECK(c.q_dim == 2);
    CHECK(c.relations_vanish);
    CHECK(c.surjective);
    CHECK(c.clifford_dims == kOdd);
    CHECK(c.bookkeeping_dims == kOdd);
    CHECK(c.h_dims == c.clifford_dims);
    CHECK(c.isomorphism);
    CHECK(c.clifford_dims[2] == 5);
  }
}

TEST_CASE("JSON input forms") {
  Json j = Json::parse(R"({"polynomial": ["-1", 0, 0, 0, 1]})");
  CHECK(mult_table_from_json(j) == cyclic4());
  CHECK(mult_table_from_json(Json::parse(R"({"split": 4})")) == split_algebra(4));
  CHECK_THROWS_AS(mult_table_from_json(Json::parse("[1]")), Error);
}
