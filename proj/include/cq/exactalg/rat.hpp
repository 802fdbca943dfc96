#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cq {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p", "-p" and "p/q"; the result is canonicalized.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& x);

// Field interface shared by Rat and number-field elements. Generic code
// never default-constructs a scalar; it derives zero and one from a sample.
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat embed(const Rat&, const Rat& value) { return value; }

// Dispatches through argument-dependent lookup so generic code sees the
// overloads of field types declared after it.
template <class F>
bool field_is_zero(const F& x) {
  return is_zero(x);
}

Int lcm_of_denominators(const std::vector<Rat>& v);
Int gcd_of_numerators(const std::vector<Rat>& v);

// Scales v by a positive rational so the entries are coprime integers.
std::vector<Rat> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace cq
