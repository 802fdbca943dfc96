#pragma once

#include <map>
#include <string>
#include <vector>

#include "cq/exactalg/rat.hpp"
#include "cq/exactalg/unipoly.hpp"

namespace cq {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over Q. Variable names are informational;
// arithmetic requires equal variable counts.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t i);
  static MultiPoly monomial(std::vector<std::string> vars, const Exponent& e, const Rat& c = Rat(1));

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rat& c);

  int total_degree() const;  // -1 for zero
  bool is_homogeneous(int degree) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rat& s) const;
  MultiPoly pow(int e) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Rat eval(const std::vector<Rat>& point) const;
  MultiPoly derivative(std::size_t var) const;
  // Replaces variable i by subs[i]; the result lives in the ring of subs.
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;
  // Coefficients of the degree-d part on the given monomial list.
  std::vector<Rat> coefficients_on(const std::vector<Exponent>& monomials) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponent, Rat> terms_;
};

// All exponent vectors of total degree d in n variables, in descending
// lexicographic order (x1^d first).
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

MultiPoly from_coefficients(const std::vector<std::string>& vars, const std::vector<Exponent>& monomials,
                            const std::vector<Rat>& coeffs);

// Binary form sum c_i x^i y^(d-i) restricted along y = 1.
QPoly dehomogenize_binary(const MultiPoly& f, int degree);

// Quadratic form v^T B v in the given variables.
MultiPoly quadratic_form(const std::vector<std::string>& vars, const QMatrix& gram);

// Symmetric Gram matrix of a quadratic form.
QMatrix gram_of_quadratic(const MultiPoly& q);

}  // namespace cq
