#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cq/correspondence/predicted.hpp"
#include "cq/correspondence/pushforward.hpp"
#include "cq/correspondence/quadruple.hpp"
#include "support/test_helpers.hpp"

using namespace cq;
using namespace cqtest;

namespace {

NetOfConics sklyanin_one() {
  const Rat h(1, 2);
  return NetOfConics({sym3({1, 0, 0, 0, h, 0}), sym3({0, 0, h, 1, 0, 0}), sym3({0, h, 0, 0, 0, 1})});
}

struct Fixture {
  const char* name;
  AlgebraicQuadruple q;
  ProjPoint point;
  const char* symbol;
};

std::vector<Fixture> fixtures() {
  return {
      {"triangle, first conic", {net_E(), {1, 1, -1}}, pt(1, 0, 1), "[(2,2)(2,2)(2,2)]"},
      {"triangle, second conic", {net_E(), {1, 2, -3}}, pt(1, 1, 1), "[(2,2)(2,2)(2,2)]"},
      {"conic and line, tangent intersection", {net_D(), {0, 0, 1}}, pt(1, 0, 0), "[(4)(4)]"},
      {"conic and line, second position", {net_D(), {1, 0, 1}}, pt(0, 1, 0), "[(4)(2,2)(2,1,1)]"},
      {"Sklyanin at c = 1", {sklyanin_one(), {0, 1, 2}}, pt(1, 0, 0), "[(2,1,1)(2,1,1)(2,1,1)(2,1,1)(2,1,1)(2,1,1)]"},
  };
}

QBinaryForm q4(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return QBinaryForm(4, v);
}

BinaryQuarticPencil random_pencil(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  for (;;) {
    try {
      BinaryQuarticPencil p(q4({d(rng), d(rng), d(rng), d(rng), d(rng)}), q4({d(rng), d(rng), d(rng), d(rng), d(rng)}));
      if (is_basepoint_free(p)) return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("quadruple validation and the xi-conic") {
  auto ok = validate_quadruple({net_E(), {1, 1, 1}});
  CHECK(ok.valid());
  CHECK(ok.off_discriminant);
  CHECK(xi_conic({net_E(), {1, 1, 1}}) == diag3(1, 1, 1));

  auto on = validate_quadruple({net_E(), {1, 0, 0}});
  CHECK(on.valid());
  CHECK_FALSE(on.off_discriminant);
  CHECK_FALSE(validate_quadruple({net_E(), {0, 0, 0}}).valid());

  const QMatrix d = xi_conic({net_D(), {0, 0, 1}});
  CHECK(d == sym3({0, 1, 0, 0, 0, 1}));
  CHECK(determinant(d) != 0);

  CHECK(xi_conic({sklyanin_one(), {1, 1, 1}}) == sym3({1, Rat(1, 2), Rat(1, 2), 1, Rat(1, 2), 1}));
}

TEST_CASE("conic parametrization") {
  const QMatrix g = sym3({0, 1, 0, 0, 0, 1});
  const auto z = parametrize_conic(g, pt(1, 0, 0));
  QBinaryForm sum = QBinaryForm::zero(4, Rat(0));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) sum = sum + (z[a] * z[b]).scaled(g(a, b));
  CHECK(sum.is_zero());
  // [1:0] goes to the chosen point.
  CHECK(same_point({z[0].coeff(2), z[1].coeff(2), z[2].coeff(2)}, pt(1, 0, 0)));

  const QMatrix xy_z = sym3({0, Rat(1, 2), 0, 0, 0, -1});
  CHECK_NOTHROW(parametrize_conic(xy_z, pt(1, 0, 0)));

  try {
    parametrize_conic(g, pt(1, 1, 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointNotOnConic);
  }
  try {
    parametrize_conic(diag3(1, 0, 0), pt(0, 1, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularConic);
  }
}

TEST_CASE("rational points on conics") {
  CHECK(find_rational_point(sym3({0, 1, 0, 0, 0, 1}), 3) == std::optional<ProjPoint>(pt(1, 0, 0)));
  CHECK(find_rational_point(diag3(1, 1, -2), 3) == std::optional<ProjPoint>(pt(1, 1, 1)));
  CHECK_FALSE(find_rational_point(diag3(1, 1, 1), 12).has_value());
}

TEST_CASE("quadruple to pencil on the curated fixtures") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto p = quadruple_to_pencil(f.q, f.point);
    CHECK(p.f1().degree() == 4);
    CHECK(is_basepoint_free(p));
    CHECK(symbol_to_string(symbol(p).partitions) == f.symbol);
  }
  CHECK(classify_pencil(quadruple_to_pencil(fixtures()[0].q, fixtures()[0].point)).label == 'E');
  CHECK(classify_pencil(quadruple_to_pencil(fixtures()[2].q, fixtures()[2].point)).label == 'A');
  CHECK(classify_pencil(quadruple_to_pencil(fixtures()[3].q, fixtures()[3].point)).label == 'B');

  try {
    quadruple_to_pencil({net_E(), {1, 0, 0}}, pt(0, 1, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnDiscriminant);
  }
}

TEST_CASE("pushforward splitting types") {
  const BinaryQuarticPencil x4y4(q4({0, 0, 0, 0, 1}), q4({1, 0, 0, 0, 0}));
  CHECK(pushforward_splitting(x4y4, 0) == std::vector<int>{0, -1, -1, -1});
  CHECK(pushforward_splitting(x4y4, 2) == std::vector<int>{0, 0, 0, -1});
  CHECK(pushforward_splitting(x4y4, 6) == std::vector<int>{1, 1, 1, 0});
  const PushforwardModule m(x4y4, 6);
  CHECK(m.component_dim(-1) == 3);
  CHECK(m.component_dim(0) == 7);
  CHECK(m.component_dim(-2) == 0);

  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 10; ++k) {
    const auto p = random_pencil(rng);
    for (int d = 0; d <= 7; ++d) CHECK(pushforward_splitting(p, d) == expected_splitting(d));
  }
  try {
    pushforward_splitting(BinaryQuarticPencil(q4({0, 0, 0, 0, 1}), q4({0, 0, 0, 1, 0})), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBasepointFree);
  }
}

TEST_CASE("pencil to quadruple") {
  const BinaryQuarticPencil x4y4(q4({0, 0, 0, 0, 1}), q4({1, 0, 0, 0, 0}));
  const auto pq = pencil_to_quadruple(x4y4);
  CHECK(pq.e_basis.size() == 3);
  CHECK(pq.relation_space.size() == 3);
  CHECK(pq.relations_symmetric);
  const auto c = classify_net(pq.quadruple.net);
  CHECK(c.type == NetType::D);
  CHECK(c.double_lines == 2);
  const auto back = quadruple_to_pencil(pq.quadruple, pq.veronese.col(0));
  CHECK(symbol_to_string(symbol(back).partitions) == "[(4)(4)]");

  std::mt19937_64 rng(99);
  for (int k = 0; k < 8; ++k) {
    const auto p = random_pencil(rng);
    const auto r = pencil_to_quadruple(p);
    const auto v = validate_quadruple(r.quadruple);
    CHECK(v.valid());
    CHECK(v.off_discriminant);
    CHECK(r.relations_symmetric);
    CHECK(symbol(quadruple_to_pencil(r.quadruple, r.veronese.col(0))).partitions == symbol(p).partitions);
  }
  try {
    pencil_to_quadruple(BinaryQuarticPencil(q4({0, 0, 0, 0, 1}), q4({0, 0, 0, 1, 0})));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBasepointFree);
  }
}

TEST_CASE("roundtrip never mismatches") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto r = roundtrip_check(f.q, f.point);
    CHECK(r.status != IsoStatus::Mismatch);
    CHECK(r.status == IsoStatus::ExplicitIso);
    REQUIRE(r.e_map.has_value());
    CHECK(determinant(*r.e_map) != 0);
    CHECK(determinant(*r.v_map) != 0);
  }
  try {
    roundtrip_check({net_E(), {0, 1, 0}}, pt(1, 0, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnDiscriminant);
  }
}

TEST_CASE("predicted symbols agree with the cover") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto pr = predicted_symbol(f.q);
    CHECK(symbol_to_string(pr.partitions) == f.symbol);
    CHECK(pr.partitions == symbol(quadruple_to_pencil(f.q, f.point)).partitions);
  }
  // Lines through the three vertices of the triangle.
  const auto e = predicted_symbol(fixtures()[0].q);
  int through_vertex = 0;
  for (const auto& l : e.lines)
    if (l.segre == SegreType::S11_1) ++through_vertex;
  CHECK(through_vertex == 3);

  CHECK(partition_for_segre(SegreType::S21) == Partition{2, 1, 1});
  CHECK(partition_for_segre(SegreType::S3) == Partition{3, 1});
  CHECK(partition_for_segre(SegreType::S21_paren) == Partition{4});
}

TEST_CASE("random quadruples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  int done = 0;
  while (done < 15) {
    std::array<QMatrix, 3> g;
    for (auto& m : g) m = sym3({d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)});
    try {
      const NetOfConics net(g);
      const AlgebraicQuadruple q{net, {Rat(d(rng)), Rat(d(rng)), Rat(d(rng))}};
      const auto v = validate_quadruple(q);
      if (!v.valid() || !v.off_discriminant) continue;
      const auto point = find_rational_point(xi_conic(q), 6);
      if (!point) continue;
      ++done;
      const auto p = quadruple_to_pencil(q, *point);
      CHECK(predicted_symbol(q).partitions == symbol(p).partitions);
      CHECK(roundtrip_check(q, *point).status != IsoStatus::Mismatch);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidInput) throw;
    }
  }
}

TEST_CASE("quadruple JSON") {
  const AlgebraicQuadruple q{net_D(), {0, 0, 1}};
  const auto back = quadruple_from_json(quadruple_to_json(q));
  CHECK(back.xi == q.xi);
  CHECK(back.net.grams() == q.net.grams());
  CHECK_THROWS(quadruple_from_json(Json::parse(R"({"net": {"grams": []}})")));
}
