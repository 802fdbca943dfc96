#pragma once

#include <initializer_list>
#include <vector>

#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/multipoly.hpp"
#include "cq/nets/net.hpp"

namespace cqtest {

// Symmetric 3x3 matrix from its upper triangle a11 a12 a13 a22 a23 a33.
inline cq::QMatrix sym3(std::initializer_list<cq::Rat> upper) {
  std::vector<cq::Rat> u(upper);
  cq::QMatrix m(3, 3);
  m(0, 0) = u[0];
  m(0, 1) = m(1, 0) = u[1];
  m(0, 2) = m(2, 0) = u[2];
  m(1, 1) = u[3];
  m(1, 2) = m(2, 1) = u[4];
  m(2, 2) = u[5];
  return m;
}

inline cq::QMatrix diag3(long a, long b, long c) { return sym3({a, 0, 0, b, 0, c}); }

inline cq::MultiPoly X() { return cq::MultiPoly::variable(cq::xyz_vars(), 0); }
inline cq::MultiPoly Y() { return cq::MultiPoly::variable(cq::xyz_vars(), 1); }
inline cq::MultiPoly Z() { return cq::MultiPoly::variable(cq::xyz_vars(), 2); }

inline cq::NetOfConics net_of(const cq::MultiPoly& a, const cq::MultiPoly& b, const cq::MultiPoly& c) {
  return cq::NetOfConics::from_quadrics({a, b, c});
}

inline cq::NetOfConics net_E() { return net_of(X() * X(), Y() * Y(), Z() * Z()); }
inline cq::NetOfConics net_D() {
  return net_of(X() * X(), Y() * Y(), Z() * Z() + (X() * Y()).scaled(cq::Rat(2)));
}
inline cq::NetOfConics net_B() { return net_of(X() * X() + Y() * Z(), Y() * Y() + X() * Z(), Z() * Z()); }
inline cq::NetOfConics net_D_special() { return net_of(X() * X() + Y() * Z(), Y() * Y(), Z() * Z()); }

inline cq::ProjPoint pt(long a, long b, long c) { return {cq::Rat(a), cq::Rat(b), cq::Rat(c)}; }

inline cq::MultiPoly yv(std::size_t i) { return cq::MultiPoly::variable(cq::y_vars(), i); }

}  // namespace cqtest
