#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cq/nets/even_clifford.hpp"
#include "cq/nets/net.hpp"
#include "cq/nets/segre.hpp"
#include "support/test_helpers.hpp"

using namespace cq;
using namespace cqtest;

namespace {

NetOfConics sklyanin_quadrics(long c) {
  return net_of(X() * X() + (Y() * Z()).scaled(Rat(c)), Y() * Y() + (X() * Z()).scaled(Rat(c)),
                Z() * Z() + (X() * Y()).scaled(Rat(c)));
}

NetOfConics basepoint_net() { return net_of(X() * X(), X() * Y(), Y() * Y()); }

}  // namespace

TEST_CASE("discriminant cubics of the standard nets") {
  auto y1 = yv(0), y2 = yv(1), y3 = yv(2);
  CHECK(discriminant_cubic(net_E()).poly() == y1 * y2 * y3);
  CHECK(discriminant_cubic(net_D()).poly() == y3 * (y1 * y2 - y3 * y3));
  // det(M)/8 for the Clifford matrices with c = 2/1 scaled down: 10 y1y2y3 - 2 sum y^3, over 8.
  auto s = discriminant_cubic(sklyanin_quadrics(1)).poly();
  auto expect = (y1 * y2 * y3).scaled(Rat(10)) - (y1.pow(3) + y2.pow(3) + y3.pow(3)).scaled(Rat(2));
  CHECK(s == expect.scaled(Rat(1, 8)));
}

TEST_CASE("degenerate nets are rejected or have vanishing discriminant") {
  CHECK_THROWS_AS(NetOfConics({diag3(1, 0, 0), diag3(1, 0, 0), diag3(0, 0, 1)}), Error);
  // Every member of <x^2, xy, y^2> is singular.
  try {
    discriminant_cubic(basepoint_net());
    FAIL("expected IdenticallyZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdenticallyZero);
  }
}

TEST_CASE("basepoint freeness") {
  CHECK(is_basepoint_free(net_E()));
  CHECK(is_basepoint_free(sklyanin_quadrics(1)));
  CHECK_FALSE(is_basepoint_free(basepoint_net()));
  CHECK(net_quotient_hilbert(net_E(), 4) == std::vector<std::size_t>{1, 3, 3, 1, 0});
}

TEST_CASE("double line counts") {
  CHECK(double_line_count(net_E()) == 3);
  CHECK(double_line_count(net_D()) == 2);
  CHECK(double_line_count(net_D_special()) == 2);
  CHECK(double_line_count(net_B()) == 1);
  CHECK(double_line_count(sklyanin_quadrics(1)) == 0);
  try {
    double_line_count(basepoint_net());
    FAIL("expected NotBasepointFree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBasepointFree);
  }
  CHECK(rational_double_lines(net_E()).size() == 3);
}

TEST_CASE("classification agrees with the double line table") {
  CHECK(classify_net(net_E()).type == NetType::E);
  CHECK(classify_net(net_B()).type == NetType::B);
  CHECK(classify_net(net_D()).type == NetType::D);
  CHECK(classify_net(net_D_special()).type == NetType::D);
  CHECK(classify_net(sklyanin_quadrics(1)).type == NetType::A);
  CHECK(classify_net(sklyanin_quadrics(3)).type == NetType::A);
  CHECK(classify_net(basepoint_net()).type == NetType::HasBasepoint);
  for (const auto& n : {net_E(), net_B(), net_D(), sklyanin_quadrics(1)}) {
    auto c = classify_net(n);
    CHECK(c.double_lines == c.jacobian_degree);
  }
}

TEST_CASE("segre symbols of pencils of conics") {
  CHECK(segre_symbol(diag3(1, 1, 1), diag3(1, 2, 3)) == SegreType::S111);
  // det(s diag(1,1,0) + t diag(0,1,1)) = s(s+t)t has three simple roots.
  CHECK(segre_symbol(diag3(1, 1, 0), diag3(0, 1, 1)) == SegreType::S111);
  CHECK(segre_symbol(diag3(1, 0, 0), diag3(0, 1, 1)) == SegreType::S11_1);
  // xz and y^2: det = -s^2 t, the double root is a rank-2 conic.
  CHECK(segre_symbol(sym3({0, 0, 1, 0, 0, 0}), diag3(0, 1, 0)) != SegreType::S111);
  try {
    segre_symbol(diag3(1, 2, 3), diag3(1, 2, 3));
    FAIL("expected DegeneratePencil");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePencil);
  }

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-3, 3);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    QMatrix a = sym3({d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)});
    QMatrix b = sym3({d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)});
    auto det = pencil_determinant(a, b);
    if (det.is_zero()) continue;
    ++checked;
    const auto type = segre_symbol(a, b);
    CHECK(static_cast<int>(root_multiplicity_partition(det).size()) == segre_singular_fibres(type));
  }
  CHECK(checked > 20);
}

TEST_CASE("evaluation of the net morphism") {
  CHECK(same_point(g_evaluate(net_E(), pt(1, 1, 1)), pt(1, 1, 1)));
  CHECK(same_point(g_evaluate(net_E(), pt(1, 2, 0)), pt(1, 4, 0)));
  CHECK(same_point(g_evaluate(net_D(), pt(0, 0, 1)), pt(0, 0, 1)));

  // Points of the conic Y_xi land on the line X_xi.
  const std::vector<Rat> xi{Rat(1), Rat(1), Rat(-1)};
  for (const auto& z : {pt(1, 0, 1), pt(0, 1, 1), pt(3, 4, 5)}) {
    auto g = g_evaluate(net_E(), z);
    CHECK(xi[0] * g[0] + xi[1] * g[1] + xi[2] * g[2] == 0);
  }
}

TEST_CASE("even Clifford algebra and the Azumaya locus") {
  CHECK(even_clifford_at_point(net_E(), pt(1, 1, 1)).is_azumaya);
  CHECK_FALSE(even_clifford_at_point(net_E(), pt(1, 0, 0)).is_azumaya);
  CHECK_FALSE(even_clifford_at_point(sklyanin_quadrics(1), pt(1, -1, 0)).is_azumaya);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-3, 3);
  for (const auto& net : {net_E(), net_B(), net_D(), sklyanin_quadrics(1)}) {
    const auto disc = discriminant_cubic(net);
    for (int t = 0; t < 15; ++t) {
      ProjPoint p = pt(d(rng), d(rng), d(rng));
      if (p[0] == 0 && p[1] == 0 && p[2] == 0) continue;
      const bool on_curve = disc.poly().eval(p) == 0;
      auto alg = even_clifford_at_point(net, p);
      CHECK(alg.is_azumaya == !on_curve);
      CHECK(alg.center_dim == (on_curve ? alg.center_dim : 1));
    }
  }
}

TEST_CASE("line intersection profiles") {
  PlaneCubic tri(yv(0) * yv(1) * yv(2));
  try {
    line_intersection_profile(tri, pt(1, 0, 0), pt(0, 1, 0));
    FAIL("expected LineInsideCubic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LineInsideCubic);
  }
  auto p = line_intersection_profile(tri, pt(1, 1, 1), pt(1, -1, 0));
  CHECK(p.partition == std::vector<int>{1, 1, 1});
  for (const auto& q : p.points) CHECK_FALSE(q.singular);

  PlaneCubic conic_line(yv(2) * (yv(0) * yv(1) - yv(2) * yv(2)));
  auto c = line_intersection_profile(conic_line, pt(0, 1, 0), pt(0, 0, 1));
  CHECK(c.partition == std::vector<int>{3});
  REQUIRE(c.points.size() == 1);
  CHECK(c.points[0].singular);

  // A line through a vertex of the triangle.
  auto v = line_intersection_profile(tri, pt(1, 0, 0), pt(0, 1, 1));
  CHECK(v.partition == std::vector<int>{2, 1});
}

TEST_CASE("rational singular points and common zeros") {
  CHECK(rational_singular_points(discriminant_cubic(net_E())).size() == 3);
  CHECK(jacobian_degree(discriminant_cubic(sklyanin_quadrics(1))) == 0);
  auto zs = rational_common_zeros({yv(0) * yv(1), yv(1) * yv(2), yv(0) * yv(2)});
  CHECK(zs.size() == 3);
}
