#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "cq/exactalg/unipoly.hpp"

namespace cq {

// Homogeneous form sum_i c_i x^i y^(d-i) of formal degree d.
template <class F>
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<F> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != degree_ + 1) fail(ErrorCode::InvalidInput, "binary form coefficient count");
  }
  static BinaryForm zero(int degree, const F& sample) {
    return BinaryForm(degree, std::vector<F>(static_cast<std::size_t>(degree) + 1, zero_like(sample)));
  }

  int degree() const { return degree_; }
  const std::vector<F>& coeffs() const { return c_; }
  const F& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const F& a) { return field_is_zero(a); });
  }
  const F& sample() const { return c_.front(); }

  BinaryForm operator+(const BinaryForm& o) const {
    if (o.degree_ != degree_) fail(ErrorCode::InvalidInput, "degree mismatch in binary form sum");
    BinaryForm r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F(r.c_[i] + o.c_[i]);
    return r;
  }
  BinaryForm operator-(const BinaryForm& o) const { return *this + o.scaled(F(-one_like(sample()))); }
  BinaryForm operator*(const BinaryForm& o) const {
    std::vector<F> r(static_cast<std::size_t>(degree_ + o.degree_) + 1, zero_like(sample()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F(r[i + j] + F(c_[i] * o.c_[j]));
    }
    return BinaryForm(degree_ + o.degree_, std::move(r));
  }
  BinaryForm scaled(const F& s) const {
    BinaryForm r = *this;
    for (auto& a : r.c_) a = F(a * s);
    return r;
  }
  bool operator==(const BinaryForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }

  F eval(const F& x, const F& y) const {
    F acc = zero_like(sample());
    for (int i = degree_; i >= 0; --i) {
      F t = c_[static_cast<std::size_t>(i)];
      for (int k = 0; k < i; ++k) t = F(t * x);
      for (int k = 0; k < degree_ - i; ++k) t = F(t * y);
      acc = F(acc + t);
    }
    return acc;
  }

  BinaryForm dx() const {
    if (degree_ == 0) return zero(0, sample());
    std::vector<F> r;
    for (int i = 1; i <= degree_; ++i) r.push_back(F(c_[static_cast<std::size_t>(i)] * embed(sample(), Rat(i))));
    return BinaryForm(degree_ - 1, std::move(r));
  }
  BinaryForm dy() const {
    if (degree_ == 0) return zero(0, sample());
    std::vector<F> r;
    for (int i = 0; i < degree_; ++i)
      r.push_back(F(c_[static_cast<std::size_t>(i)] * embed(sample(), Rat(degree_ - i))));
    return BinaryForm(degree_ - 1, std::move(r));
  }

  // Restriction to the chart y = 1 and the multiplicity of the root [1:0].
  UniPoly<F> dehomogenize() const { return UniPoly<F>(c_, sample()); }
  int multiplicity_at_infinity() const {
    int k = 0;
    for (int i = degree_; i >= 0 && field_is_zero(c_[static_cast<std::size_t>(i)]); --i) ++k;
    return k;
  }

  // f(a x + b y, c x + d y)
  BinaryForm substitute(const F& a, const F& b, const F& c, const F& d) const {
    const BinaryForm lx(1, {b, a});
    const BinaryForm ly(1, {d, c});
    BinaryForm acc = zero(degree_, sample());
    for (int i = 0; i <= degree_; ++i) {
      if (field_is_zero(c_[static_cast<std::size_t>(i)])) continue;
      BinaryForm t(0, {c_[static_cast<std::size_t>(i)]});
      for (int k = 0; k < i; ++k) t = t * lx;
      for (int k = 0; k < degree_ - i; ++k) t = t * ly;
      acc = acc + t;
    }
    return acc;
  }

 private:
  int degree_ = 0;
  std::vector<F> c_;
};

using QBinaryForm = BinaryForm<Rat>;

template <class F>
BinaryForm<F> homogenize(const UniPoly<F>& p, int degree) {
  std::vector<F> c(static_cast<std::size_t>(degree) + 1, p.zero());
  for (int i = 0; i <= p.degree(); ++i) c.at(static_cast<std::size_t>(i)) = p.coeff(i);
  return BinaryForm<F>(degree, std::move(c));
}

// Sylvester resultant of forms with their formal degrees.
template <class F>
F binary_resultant(const BinaryForm<F>& p, const BinaryForm<F>& q) {
  const int m = p.degree(), n = q.degree();
  if (m + n == 0) return one_like(p.sample());
  const std::size_t N = static_cast<std::size_t>(m + n);
  Matrix<F> s(N, N, zero_like(p.sample()));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = p.coeff(k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = q.coeff(k);
  return determinant(s);
}

// Discriminant up to a nonzero constant: Res(f_x, f_y) vanishes exactly
// when f has a repeated root on P^1.
template <class F>
F binary_discriminant(const BinaryForm<F>& f) {
  return binary_resultant(f.dx(), f.dy());
}

// Multiplicities of the roots of f on P^1 (over the algebraic closure),
// sorted descending.
template <class F>
std::vector<int> root_multiplicity_partition(const BinaryForm<F>& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "partition of the zero form");
  std::vector<int> parts;
  const int inf = f.multiplicity_at_infinity();
  if (inf > 0) parts.push_back(inf);
  const UniPoly<F> g = f.dehomogenize();
  for (const auto& [h, m] : squarefree_decomposition(g))
    for (int k = 0; k < h.degree(); ++k) parts.push_back(m);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

}  // namespace cq
