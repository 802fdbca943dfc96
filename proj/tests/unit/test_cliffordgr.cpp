#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cq/cliffordgr/graded_clifford.hpp"
#include "support/test_helpers.hpp"

using namespace cq;
using namespace cqtest;

namespace {

const std::vector<std::size_t> kPolynomial{1, 3, 6, 10, 15, 21, 28};

std::vector<std::size_t> prefix(const std::vector<std::size_t>& v, std::size_t n) {
  return std::vector<std::size_t>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

TEST_CASE("Sklyanin matrices and parameter exclusions") {
  auto g = sklyanin_net(Rat(1));
  CHECK(g.matrices()[0] == sym3({2, 0, 0, 0, 1, 0}));
  CHECK(g.matrices()[1] == sym3({0, 0, 1, 2, 0, 0}));
  CHECK(g.matrices()[2] == sym3({0, 1, 0, 0, 0, 2}));
  for (const Rat& c : {Rat(0), Rat(2), Rat(-1)}) {
    try {
      sklyanin_net(c);
      FAIL("expected ExcludedParameter");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ExcludedParameter);
    }
  }
}

TEST_CASE("relation counts and shapes") {
  auto r = relations(sklyanin_net(Rat(3)));
  CHECK(r.anticommutators.size() == 6);
  CHECK(r.xy_commutators.size() == 9);
  CHECK(r.yy_commutators.size() == 3);
  // x1x2 + x2x1 = c y3
  const auto& rel = r.anticommutators[1];
  REQUIRE(rel.terms.size() == 3);
  CHECK(rel.terms[2].first == -3);
  CHECK(rel.terms[2].second == Word{5});

  auto e = relations(special_nets().e);
  CHECK(e.anticommutators[0].terms.size() == 3);  // 2 x1^2 = 2 y1
  CHECK(e.anticommutators[1].terms.size() == 2);  // x1x2 + x2x1 = 0

  auto z = relations(GradedCliffordAlgebra({QMatrix(3, 3), QMatrix(3, 3), QMatrix(3, 3)}));
  for (const auto& a : z.anticommutators) CHECK(a.terms.size() == 2);
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function(sklyanin_net(Rat(1)), 6) == kPolynomial);
  CHECK(hilbert_function(sklyanin_net(Rat(1)), 0) == std::vector<std::size_t>{1});
  auto sp = special_nets();
  for (const auto& g : {sp.b, sp.d, sp.e}) CHECK(hilbert_function(g, 6) == kPolynomial);

  // A graded Clifford algebra is free of rank 8 over the central polynomial
  // ring whether or not the net has a basepoint.
  auto bad = GradedCliffordAlgebra::from_net(net_of(X() * X(), X() * Y(), Y() * Y()));
  CHECK(hilbert_function(bad, 4) == prefix(kPolynomial, 5));

  // Exterior algebra on x tensored with polynomials in three central y.
  auto ext = hilbert_function(GradedCliffordAlgebra({QMatrix(3, 3), QMatrix(3, 3), QMatrix(3, 3)}), 4);
  CHECK(ext == std::vector<std::size_t>{1, 3, 6, 10, 15});

  try {
    hilbert_function(sp.e, 9);
    FAIL("expected DegreeBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBoundExceeded);
  }
}

TEST_CASE("point scheme cubic") {
  auto y1 = yv(0), y2 = yv(1), y3 = yv(2);
  for (long c : {1L, 3L, -2L}) {
    auto g = sklyanin_net(Rat(c));
    auto expect = (y1 * y2 * y3).scaled(Rat(2 * c * c * c + 8)) -
                  (y1.pow(3) + y2.pow(3) + y3.pow(3)).scaled(Rat(2 * c * c));
    CHECK(point_scheme_cubic(g).poly() == expect);
    CHECK(point_scheme_cubic(g).poly() == discriminant_cubic(g.net()).poly().scaled(Rat(8)));
  }
  CHECK(point_scheme_cubic(special_nets().e).poly() == (y1 * y2 * y3).scaled(Rat(8)));
  CHECK(point_scheme_cubic(special_nets().d).poly() == (y1 * y2 * y3).scaled(Rat(8)) - y1.pow(3).scaled(Rat(2)));
}

TEST_CASE("special nets induce the expected nets of conics") {
  auto sp = special_nets();
  auto same_net = [](const NetOfConics& a, const NetOfConics& b) {
    for (std::size_t m = 0; m < 3; ++m)
      if (!(a.gram(m) == b.gram(m))) return false;
    return true;
  };
  CHECK(same_net(sp.e.net(), net_E()));
  CHECK(same_net(sp.b.net(), net_B()));
  CHECK(same_net(sp.d.net(), net_D_special()));
  CHECK(classify_net(sp.b.net()).type == NetType::B);
  CHECK(classify_net(sp.d.net()).type == NetType::D);
  CHECK(classify_net(sp.e.net()).type == NetType::E);
}

TEST_CASE("Hilbert function does not separate basepoint-free nets") {
  std::vector<NetOfConics> nets{net_E(), net_B(), net_D(), net_of(X() * X(), X() * Y(), Y() * Y()),
                                net_of(X() * X(), Y() * Y(), X() * Y())};
  for (const auto& n : nets) CHECK(hilbert_function(GradedCliffordAlgebra::from_net(n), 6) == kPolynomial);
  CHECK_FALSE(is_basepoint_free(nets[3]));
  CHECK_FALSE(is_basepoint_free(nets[4]));
}
