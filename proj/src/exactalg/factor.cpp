#include "cq/exactalg/factor.hpp"

#include <algorithm>
#include <random>

namespace cq {

namespace {

using i64 = long long;
using ModPoly = std::vector<i64>;  // ascending coefficients in [0, p)

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 inv_mod(i64 a, i64 p) {
  i64 t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr != 0) {
    const i64 q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) fail(ErrorCode::InternalInconsistency, "non-invertible residue");
  return mod(t, p);
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly sub(const ModPoly& a, const ModPoly& b, i64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
  trim(r);
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> divrem(ModPoly a, const ModPoly& b, i64 p) {
  if (b.empty()) fail(ErrorCode::InternalInconsistency, "modular division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  const i64 inv = inv_mod(b.back(), p);
  ModPoly q(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
  for (int k = deg(a); k >= deg(b); --k) {
    const i64 f = a[static_cast<std::size_t>(k)] * inv % p;
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - deg(b))] = f;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = a[static_cast<std::size_t>(k - deg(b) + j)];
      slot = mod(slot - f * b[static_cast<std::size_t>(j)], p);
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly monic(ModPoly a, i64 p) {
  if (a.empty()) return a;
  const i64 inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, i64 p) {
  while (!b.empty()) {
    auto r = divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s, t with s a + t b = 1 (inputs coprime).
std::pair<ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b, i64 p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) fail(ErrorCode::InternalInconsistency, "Hensel factors not coprime");
  const i64 inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

ModPoly derivative(const ModPoly& a, i64 p) {
  ModPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mod(a[i] * static_cast<i64>(i), p));
  trim(r);
  return r;
}

ModPoly powmod(ModPoly base, const Int& e, const ModPoly& m, i64 p) {
  ModPoly r{1};
  base = divrem(base, m, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = divrem(mul(r, r, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = divrem(mul(r, base, p), m, p).second;
  }
  return r;
}

using ZPoly = std::vector<Int>;

ModPoly reduce(const ZPoly& f, i64 p) {
  ModPoly r;
  for (const auto& c : f) {
    Int m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    r.push_back(static_cast<i64>(m.get_si()));
  }
  trim(r);
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting of a
// monic squarefree polynomial over F_p, p odd.
std::vector<ModPoly> factor_mod_p(ModPoly f, i64 p, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> ddf;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(h, Int(static_cast<unsigned long>(p)), f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      ddf.emplace_back(g, i);
      f = divrem(f, g, p).first;
      h = divrem(h, f, p).second;
    }
  }
  if (deg(f) > 0) ddf.emplace_back(f, deg(f));

  std::vector<ModPoly> out;
  for (auto& [g, d] : ddf) {
    std::vector<ModPoly> todo{g};
    while (!todo.empty()) {
      ModPoly cur = todo.back();
      todo.pop_back();
      if (deg(cur) == d) {
        out.push_back(monic(cur, p));
        continue;
      }
      Int e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      while (true) {
        ModPoly a;
        for (int k = 0; k < deg(cur); ++k) a.push_back(static_cast<i64>(rng() % static_cast<std::uint64_t>(p)));
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b = sub(powmod(a, e, cur, p), ModPoly{1}, p);
        ModPoly s = gcd(cur, b, p);
        if (deg(s) > 0 && deg(s) < deg(cur)) {
          todo.push_back(s);
          todo.push_back(divrem(cur, s, p).first);
          break;
        }
      }
    }
  }
  return out;
}

Int mod_sym(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mod_sym(c, m);
  return r;
}

ZPoly lift_poly(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

// Lift f = g h (mod p) to (mod p^k); g monic.
std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& f, const ModPoly& g0, const ModPoly& h0, i64 p, int k) {
  const auto [s, t] = xgcd(g0, h0, p);
  ZPoly g = lift_poly(g0), h = lift_poly(h0);
  Int q = static_cast<long>(p);
  for (int j = 1; j < k; ++j) {
    const Int q_next = q * static_cast<long>(p);
    ZPoly gh = zmul(g, h, q_next);
    ModPoly e;
    for (std::size_t i = 0; i < std::max(f.size(), gh.size()); ++i) {
      Int diff = (i < f.size() ? f[i] : Int(0)) - (i < gh.size() ? gh[i] : Int(0));
      diff = mod_sym(diff, q_next);
      if (diff % q != 0) fail(ErrorCode::InternalInconsistency, "Hensel step lost exactness");
      Int quot = diff / q;
      Int r;
      mpz_fdiv_r_ui(r.get_mpz_t(), quot.get_mpz_t(), static_cast<unsigned long>(p));
      e.push_back(static_cast<i64>(r.get_si()));
    }
    trim(e);
    const ModPoly dg = divrem(mul(t, e, p), g0, p).second;
    const ModPoly dh = divrem(sub(e, mul(dg, h0, p), p), g0, p).first;
    for (std::size_t i = 0; i < dg.size(); ++i) {
      if (i >= g.size()) g.resize(i + 1, Int(0));
      g[i] = mod_sym(g[i] + q * static_cast<long>(dg[i]), q_next);
    }
    for (std::size_t i = 0; i < dh.size(); ++i) {
      if (i >= h.size()) h.resize(i + 1, Int(0));
      h[i] = mod_sym(h[i] + q * static_cast<long>(dh[i]), q_next);
    }
    q = q_next;
  }
  return {g, h};
}

// Lift the monic modular factors of f to monic factors modulo p^k, so that
// f = lc(f) * prod(result) (mod p^k).
std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<ModPoly>& facs, i64 p, int k) {
  if (facs.size() == 1) {
    Int m = 1;
    for (int j = 0; j < k; ++j) m *= static_cast<long>(p);
    Int inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
    ZPoly r;
    for (const auto& c : f) r.push_back(mod_sym(c * inv, m));
    return {r};
  }
  const std::size_t half = facs.size() / 2;
  std::vector<ModPoly> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPoly> right(facs.begin() + static_cast<std::ptrdiff_t>(half), facs.end());
  ModPoly g0{1}, h0 = reduce(ZPoly{f.back()}, p);
  for (const auto& a : left) g0 = mul(g0, a, p);
  for (const auto& b : right) h0 = mul(h0, b, p);
  auto [g, h] = hensel_two(f, g0, h0, p, k);
  auto lg = hensel_multi(g, left, p, k);
  auto lh = hensel_multi(h, right, p, k);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

ZPoly to_zpoly(const QPoly& p) {
  const QPoly pp = primitive_part(p);
  ZPoly out;
  for (const auto& c : pp.coeffs()) out.push_back(c.get_num());
  return out;
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rat> c;
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c), Rat(0));
}

// Irreducible monic factors of a monic squarefree rational polynomial.
std::vector<QPoly> factor_squarefree(const QPoly& sqf) {
  if (sqf.degree() <= 1) return {sqf.monic()};
  ZPoly f = to_zpoly(sqf);
  const int n = static_cast<int>(f.size()) - 1;

  i64 p = 7;
  ModPoly fp;
  for (;; ++p) {
    if (!is_prime(p)) continue;
    if (f.back() % static_cast<long>(p) == 0) continue;
    fp = monic(reduce(f, p), p);
    if (deg(gcd(fp, derivative(fp, p), p)) == 0) break;
  }
  std::mt19937_64 rng(0x5eed1234ULL + static_cast<std::uint64_t>(p));
  std::vector<ModPoly> modfacs = factor_mod_p(fp, p, rng);
  if (modfacs.size() == 1) return {sqf.monic()};

  Int maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Int(abs(c)));
  Int bound = maxc * static_cast<long>(n + 1) * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  int k = 1;
  Int m = static_cast<long>(p);
  while (m <= bound) {
    m *= static_cast<long>(p);
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_multi(f, modfacs, p, k);
  std::vector<QPoly> result;
  QPoly rest = to_qpoly(f);
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  for (std::size_t sz = 1; 2 * sz <= remaining; ++sz) {
    bool found = true;
    while (found) {
      found = false;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!used[i]) idx.push_back(i);
      if (2 * sz > idx.size()) break;
      std::vector<bool> pick(idx.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(sz), true);
      do {
        const Int lcr = to_zpoly(rest).back();
        ZPoly cand{lcr};
        for (std::size_t j = 0; j < idx.size(); ++j)
          if (pick[j]) cand = zmul(cand, lifted[idx[j]], m);
        QPoly c = primitive_part(to_qpoly(cand));
        if (c.degree() > 0 && (rest % c).is_zero()) {
          result.push_back(c.monic());
          rest = primitive_part(rest / c);
          for (std::size_t j = 0; j < idx.size(); ++j)
            if (pick[j]) used[idx[j]] = true;
          remaining -= sz;
          found = true;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  if (rest.degree() > 0) result.push_back(rest.monic());
  return result;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rat> c = primitive_integer_vector(p.coeffs());
  if (sgn(c.back()) < 0)
    for (auto& x : c) x = -x;
  return QPoly(std::move(c), Rat(0));
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat c = p.coeff(i);
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const bool unit = a == 1 && i > 0;
    if (!unit) out += cq::to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Factorization factor_rationals(const QPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "factorization of zero");
  if (p.degree() > kFactorDegreeBound) {
    fail(ErrorCode::DegreeBoundExceeded, "degree " + std::to_string(p.degree()) + " exceeds the factorization bound");
  }
  Factorization out;
  out.unit = p.lc();
  for (const auto& [g, mult] : squarefree_decomposition(p))
    for (const auto& h : factor_squarefree(g)) out.factors.emplace_back(h, mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

std::vector<Rat> rational_roots(const QPoly& p) {
  std::vector<Rat> roots;
  for (const auto& [f, m] : factor_rationals(p).factors)
    if (f.degree() == 1) roots.push_back(-f.coeff(0));
  return roots;
}

}  // namespace cq
