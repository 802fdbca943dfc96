#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cq/core/error.hpp"
#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/rat.hpp"

namespace cq {

// Dense univariate polynomial with ascending coefficients over a field F.
// Each polynomial stores a zero element of F; over a number field this
// records the field, also for the zero polynomial.
template <class F>
class UniPoly {
 public:
  UniPoly() : zero_(F()) {}
  explicit UniPoly(const F& zero) : zero_(zero_like(zero)) {}
  UniPoly(std::vector<F> coeffs, const F& zero) : c_(std::move(coeffs)), zero_(zero_like(zero)) { trim(); }

  static UniPoly constant(const F& a) { return UniPoly(std::vector<F>{a}, a); }
  static UniPoly monomial(const F& a, int deg) {
    std::vector<F> c(static_cast<std::size_t>(deg) + 1, zero_like(a));
    c.back() = a;
    return UniPoly(std::move(c), a);
  }
  // x - r
  static UniPoly linear_root(const F& r) { return UniPoly(std::vector<F>{F(-r), one_like(r)}, r); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const F& zero() const { return zero_; }
  F one() const { return one_like(zero_); }
  const F& lc() const {
    if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : zero_; }
  const std::vector<F>& coeffs() const { return c_; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = F(r[i] + o.c_[i]);
    return UniPoly(std::move(r), zero_);
  }
  UniPoly operator-() const {
    std::vector<F> r = c_;
    for (auto& x : r) x = F(-x);
    return UniPoly(std::move(r), zero_);
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly(zero_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        if (!field_is_zero(o.c_[j])) r[i + j] = F(r[i + j] + F(c_[i] * o.c_[j]));
    }
    return UniPoly(std::move(r), zero_);
  }
  UniPoly scaled(const F& s) const {
    std::vector<F> r = c_;
    for (auto& x : r) x = F(x * s);
    return UniPoly(std::move(r), zero_);
  }
  UniPoly shifted(int k) const {
    if (c_.empty()) return *this;
    std::vector<F> r(static_cast<std::size_t>(k), zero_);
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r), zero_);
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
    if (d.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    std::vector<F> r = c_;
    const int dd = d.degree();
    if (degree() < dd) return {UniPoly(zero_), *this};
    std::vector<F> q(static_cast<std::size_t>(degree() - dd) + 1, zero_);
    const F inv = F(one_like(d.lc()) / d.lc());
    for (int k = degree(); k >= dd; --k) {
      const F& top = r[static_cast<std::size_t>(k)];
      if (field_is_zero(top)) continue;
      const F f = F(top * inv);
      q[static_cast<std::size_t>(k - dd)] = f;
      for (int j = 0; j <= dd; ++j)
        r[static_cast<std::size_t>(k - dd + j)] = F(r[static_cast<std::size_t>(k - dd + j)] - F(f * d.c_[static_cast<std::size_t>(j)]));
    }
    return {UniPoly(std::move(q), zero_), UniPoly(std::move(r), zero_)};
  }
  UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }
  bool divides(const UniPoly& m) const { return (m % *this).is_zero(); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(zero_);
    std::vector<F> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(F(c_[i] * embed(zero_, Rat(static_cast<long>(i)))));
    return UniPoly(std::move(r), zero_);
  }
  F eval(const F& x) const {
    F acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = F(F(acc * x) + c_[i]);
    return acc;
  }
  UniPoly monic() const {
    if (c_.empty()) return *this;
    return scaled(F(one_like(lc()) / lc()));
  }
  UniPoly pow(int e) const {
    UniPoly r = constant(one()), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  // p(q(x))
  UniPoly compose(const UniPoly& q) const {
    UniPoly acc(zero_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
  F zero_;
};

using QPoly = UniPoly<Rat>;

inline QPoly qpoly(std::initializer_list<long> ascending) {
  std::vector<Rat> c;
  for (long v : ascending) c.emplace_back(v);
  return QPoly(std::move(c), Rat(0));
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct XgcdResult {
  UniPoly<F> g, s, t;  // g = s a + t b, g monic
};

template <class F>
XgcdResult<F> xgcd(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F zero = a.zero();
  UniPoly<F> r0 = a, r1 = b;
  UniPoly<F> s0 = UniPoly<F>::constant(one_like(zero)), s1(zero);
  UniPoly<F> t0(zero), t1 = UniPoly<F>::constant(one_like(zero));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F inv = F(one_like(zero) / r0.lc());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Sylvester determinant; rows of p come first and each row lists
// coefficients in ascending degree order.
template <class F>
F resultant(const UniPoly<F>& p, const UniPoly<F>& q) {
  if (p.is_zero() && q.is_zero()) fail(ErrorCode::BothZero, "resultant of two zero polynomials");
  const F zero = p.zero();
  if (p.is_zero() || q.is_zero()) return zero;
  const int m = p.degree(), n = q.degree();
  if (m == 0 && n == 0) return one_like(zero);
  const std::size_t N = static_cast<std::size_t>(m + n);
  Matrix<F> s(N, N, zero);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = p.coeff(k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = q.coeff(k);
  return determinant(s);
}

template <class F>
std::vector<std::pair<UniPoly<F>, int>> squarefree_decomposition(const UniPoly<F>& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<UniPoly<F>, int>> out;
  if (p.degree() == 0) return out;
  const UniPoly<F> a = p.monic();
  const UniPoly<F> da = a.derivative();
  const UniPoly<F> b = gcd(a, da);
  UniPoly<F> c = a / b;
  UniPoly<F> d = da / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UniPoly<F> y = gcd(c, d);
    if (y.degree() > 0) out.emplace_back(y, i);
    c = c / y;
    d = d / y - c.derivative();
    ++i;
  }
  return out;
}

template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
  UniPoly<F> r = UniPoly<F>::constant(one_like(p.zero()));
  for (const auto& [f, m] : squarefree_decomposition(p)) r = r * f;
  return r;
}

std::string to_string(const QPoly& p, const std::string& var = "x");

// Rescale a rational polynomial to coprime integer coefficients with positive leading coefficient.
QPoly primitive_part(const QPoly& p);

}  // namespace cq
