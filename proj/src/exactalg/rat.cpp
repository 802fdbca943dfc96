#include "cq/exactalg/rat.hpp"

#include <cctype>

#include "cq/core/error.hpp"

namespace cq {

namespace {

bool valid_integer_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+') {
    fail(ErrorCode::InvalidInput, "not a rational number: '" + text + "'");
  }
  Int n(num[0] == '+' ? num.substr(1) : num);
  Int d(den);
  if (d == 0) fail(ErrorCode::InvalidInput, "zero denominator: '" + text + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int lcm_of_denominators(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& x : v) {
    Int out;
    mpz_lcm(out.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    l = out;
  }
  return l;
}

Int gcd_of_numerators(const std::vector<Rat>& v) {
  Int g = 0;
  for (const auto& x : v) {
    Int out;
    mpz_gcd(out.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    g = out;
  }
  return g;
}

std::vector<Rat> primitive_integer_vector(const std::vector<Rat>& v) {
  const Int l = lcm_of_denominators(v);
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(Rat(x * l));
  const Int g = gcd_of_numerators(out);
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace cq
