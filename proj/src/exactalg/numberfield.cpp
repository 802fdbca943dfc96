#include "cq/exactalg/numberfield.hpp"

#include "cq/exactalg/factor.hpp"

namespace cq {

std::shared_ptr<const NumberField> NumberField::make(const QPoly& minimal) {
  if (minimal.degree() < 1) fail(ErrorCode::InvalidInput, "minimal polynomial must have positive degree");
  const auto fac = factor_rationals(minimal);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1) {
    fail(ErrorCode::InvalidInput, "minimal polynomial is reducible: " + to_string(minimal));
  }
  return make_trusted(minimal);
}

std::shared_ptr<const NumberField> NumberField::make_trusted(const QPoly& minimal) {
  return std::shared_ptr<const NumberField>(new NumberField(minimal.monic()));
}

NFElem::NFElem(FieldPtr field, QPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {
  if (!field_) fail(ErrorCode::InvalidInput, "number field element without a field");
  if (rep_.degree() >= field_->degree()) rep_ = rep_ % field_->minimal();
}

NFElem::NFElem(FieldPtr field, const Rat& value) : NFElem(std::move(field), QPoly::constant(value)) {}

NFElem NFElem::generator(const FieldPtr& field) { return NFElem(field, QPoly::monomial(Rat(1), 1)); }

Rat NFElem::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidInput, "element is not rational");
  return rep_.coeff(0);
}

const FieldPtr& NFElem::common_field(const NFElem& o) const {
  if (!field_) return o.field_;
  if (o.field_ && o.field_ != field_ && !(o.field_->minimal() == field_->minimal())) {
    fail(ErrorCode::InvalidInput, "arithmetic across different number fields");
  }
  return field_;
}

NFElem NFElem::operator+(const NFElem& o) const { return NFElem(common_field(o), rep_ + o.rep_); }
NFElem NFElem::operator-(const NFElem& o) const { return NFElem(common_field(o), rep_ - o.rep_); }
NFElem NFElem::operator-() const { return NFElem(field_, -rep_); }
NFElem NFElem::operator*(const NFElem& o) const { return NFElem(common_field(o), rep_ * o.rep_); }

NFElem NFElem::inverse() const {
  if (is_zero()) fail(ErrorCode::NonInvertibleElement, "inverse of zero");
  const auto x = xgcd(rep_, field_->minimal());
  if (x.g.degree() != 0) {
    fail(ErrorCode::NonInvertibleElement,
         "element shares a factor with the minimal polynomial " + cq::to_string(field_->minimal()));
  }
  return NFElem(field_, x.s);
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

std::string NFElem::to_string(const std::string& gen) const { return cq::to_string(rep_, gen); }

NFPoly to_field(const QPoly& p, const FieldPtr& field) {
  std::vector<NFElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(field, x);
  return NFPoly(std::move(c), NFElem(field, Rat(0)));
}

NFPoly gcd_over_field(const NFPoly& p, const NFPoly& q, const FieldPtr& field) {
  for (const auto* poly : {&p, &q})
    for (const auto& c : poly->coeffs())
      if (c.field() && !(c.field()->minimal() == field->minimal()))
        fail(ErrorCode::InvalidInput, "coefficient outside the given number field");
  return gcd(p, q);
}

}  // namespace cq
