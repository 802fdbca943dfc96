#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cq/frobenius/frobenius.hpp"
#include "support/test_helpers.hpp"

using namespace cq;
using namespace cqtest;

namespace {

NetOfConics sklyanin1() {
  return net_of(X() * X() + Y() * Z(), Y() * Y() + X() * Z(), Z() * Z() + X() * Y());
}

std::vector<NetOfConics> corpus() { return {net_E(), net_B(), net_D(), net_D_special(), sklyanin1()}; }

}  // namespace

TEST_CASE("quotient dimensions and basepoint rejection") {
  for (const auto& n : corpus()) CHECK(frobenius_quotient(n).hilbert == std::vector<std::size_t>{1, 3, 3, 1});
  try {
    frobenius_quotient(net_of(X() * X(), X() * Y(), Y() * Y()));
    FAIL("expected NotBasepointFree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBasepointFree);
  }
}

TEST_CASE("monomial net behaves like an exterior algebra") {
  auto a = frobenius_quotient(net_E());
  // x^2 = 0 in A.
  auto x2 = a.reduce(X() * X());
  for (const auto& v : x2) CHECK(v == 0);
  auto s = structure_constants(a);
  CHECK(s.totally_symmetric);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        const bool distinct = i != j && j != l && i != l;
        CHECK((s.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] != 0) ==
              distinct);
      }
}

TEST_CASE("structure constants are totally symmetric") {
  for (const auto& n : corpus()) CHECK(structure_constants(frobenius_quotient(n)).totally_symmetric);
  auto s = structure_constants(frobenius_quotient(sklyanin1()));
  CHECK(s.c[0][1][2] == s.c[2][0][1]);
}

TEST_CASE("dual bases") {
  for (const auto& n : corpus()) {
    auto d = dual_bases(n, 8);
    CHECK(d.delta_ok);
    CHECK(d.normalization_ok);
    CHECK(d.central_ok);
  }
  auto a = frobenius_quotient(net_E());
  auto d = dual_bases(a, 8);
  CHECK(a.ext->trace(d.e[0] * d.f[0]) == MultiPoly::constant(a.ext->base_vars(), Rat(1)));
  CHECK_THROWS_AS(dual_bases(a, 2), Error);
}

TEST_CASE("alpha and beta fit the exact rows") {
  for (const auto& n : corpus()) {
    auto r = alpha_beta_check(frobenius_quotient(n));
    CHECK(r.alpha_square_commutes);
    CHECK(r.beta_square_commutes);
    CHECK(r.beta_alpha_zero);
    CHECK(r.rank_alpha == 3);
    CHECK(r.rank_beta == 3);
    CHECK(r.passes());
  }
}

TEST_CASE("cokernel of Phi matches Omega") {
  for (const auto& n : {net_E(), sklyanin1(), net_B()}) {
    auto r = coker_phi_hilbert_check(n, 10);
    CHECK(r.equal);
    CHECK(r.coker_dims[0] == 0);
    CHECK(r.omega_dims[4] == 3);
  }
  CHECK_THROWS_AS(coker_phi_hilbert_check(net_E(), 13), Error);
}
