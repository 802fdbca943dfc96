#pragma once

#include <memory>
#include <string>

#include "cq/exactalg/unipoly.hpp"

namespace cq {

// Q[theta]/(m) for a monic irreducible m. Irreducibility is checked on
// construction with factor_rationals.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(const QPoly& minimal);
  // Skips the irreducibility check; for internal use with a factor that
  // factor_rationals has just produced.
  static std::shared_ptr<const NumberField> make_trusted(const QPoly& minimal);

  const QPoly& minimal() const { return minimal_; }
  int degree() const { return minimal_.degree(); }

 private:
  explicit NumberField(QPoly minimal) : minimal_(std::move(minimal)) {}
  QPoly minimal_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
 public:
  NFElem() = default;
  NFElem(FieldPtr field, QPoly rep);
  NFElem(FieldPtr field, const Rat& value);

  static NFElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat rational_value() const;

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator-() const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;
  NFElem inverse() const;
  bool operator==(const NFElem& o) const { return rep_ == o.rep_; }
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  std::string to_string(const std::string& gen = "t") const;

 private:
  const FieldPtr& common_field(const NFElem& o) const;
  FieldPtr field_;
  QPoly rep_;
};

inline bool is_zero(const NFElem& x) { return x.is_zero(); }
inline NFElem zero_like(const NFElem& x) { return NFElem(x.field(), Rat(0)); }
inline NFElem one_like(const NFElem& x) { return NFElem(x.field(), Rat(1)); }
inline NFElem embed(const NFElem& like, const Rat& value) { return NFElem(like.field(), value); }

using NFPoly = UniPoly<NFElem>;

NFPoly to_field(const QPoly& p, const FieldPtr& field);

// Monic gcd over the field; inversions go through an extended gcd against
// the minimal polynomial.
NFPoly gcd_over_field(const NFPoly& p, const NFPoly& q, const FieldPtr& field);

}  // namespace cq
