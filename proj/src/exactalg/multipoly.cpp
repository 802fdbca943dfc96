#include "cq/exactalg/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cq {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t i) {
  Exponent e(vars.size(), 0);
  e.at(i) = 1;
  return monomial(std::move(vars), e);
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, const Exponent& e, const Rat& c) {
  MultiPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

Rat MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != vars_.size()) fail(ErrorCode::InvalidInput, "exponent length does not match variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (o.nvars() != nvars()) fail(ErrorCode::InvalidInput, "variable count mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (o.nvars() != nvars()) fail(ErrorCode::InvalidInput, "variable count mismatch");
  MultiPoly r(vars_);
  Exponent e(nvars());
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      r.add_term(e, Rat(ca * cb));
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
  MultiPoly r(vars_);
  if (sgn(s) == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MultiPoly MultiPoly::pow(int n) const {
  MultiPoly r = constant(vars_, Rat(1)), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != nvars()) fail(ErrorCode::InvalidInput, "evaluation point has wrong length");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, Rat(c * e[var]));
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  if (subs.size() != nvars()) fail(ErrorCode::InvalidInput, "substitution list has wrong length");
  if (subs.empty()) return *this;
  const auto& target_vars = subs.front().vars();
  MultiPoly r(target_vars);
  std::vector<std::vector<MultiPoly>> powers(nvars());
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target_vars, Rat(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
      if (e[i] > 0) t = t * pw[static_cast<std::size_t>(e[i])];
    }
    r = r + t;
  }
  return r;
}

std::vector<Rat> MultiPoly::coefficients_on(const std::vector<Exponent>& monomials) const {
  std::vector<Rat> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.push_back(coeff(m));
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const Rat a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (is_const) out += cq::to_string(a);
    else if (a == 1) out += mono;
    else out += cq::to_string(a) + "*" + mono;
  }
  return out;
}

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  if (d < 0) return out;
  Exponent e(n, 0);
  // Recursive enumeration, first variable descending.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

MultiPoly from_coefficients(const std::vector<std::string>& vars, const std::vector<Exponent>& monomials,
                            const std::vector<Rat>& coeffs) {
  MultiPoly p(vars);
  for (std::size_t i = 0; i < monomials.size(); ++i) p.add_term(monomials[i], coeffs[i]);
  return p;
}

QPoly dehomogenize_binary(const MultiPoly& f, int degree) {
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1, Rat(0));
  for (const auto& [e, v] : f.terms()) c.at(static_cast<std::size_t>(e.at(0))) += v;
  return QPoly(std::move(c), Rat(0));
}

MultiPoly quadratic_form(const std::vector<std::string>& vars, const QMatrix& gram) {
  MultiPoly q(vars);
  const std::size_t n = vars.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n, 0);
      e[i] += 1;
      e[j] += 1;
      q.add_term(e, gram(i, j));
    }
  return q;
}

QMatrix gram_of_quadratic(const MultiPoly& q) {
  const std::size_t n = q.nvars();
  QMatrix g(n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx.size() != 2) fail(ErrorCode::InvalidInput, "not a quadratic form");
    if (idx[0] == idx[1]) g(idx[0], idx[0]) += c;
    else {
      g(idx[0], idx[1]) += c / 2;
      g(idx[1], idx[0]) += c / 2;
    }
  }
  return g;
}

}  // namespace cq
