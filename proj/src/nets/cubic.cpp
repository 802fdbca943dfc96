#include "cq/nets/cubic.hpp"

#include <random>

#include "cq/exactalg/binaryform.hpp"
#include "cq/exactalg/factor.hpp"
#include "cq/graded/free_extension.hpp"

namespace cq {

namespace {

// Coefficients in the last variable after fixing the first two.
QPoly specialize_last(const MultiPoly& f, const Rat& a, const Rat& b) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(f.total_degree(), 0)) + 1, Rat(0));
  for (const auto& [e, v] : f.terms()) {
    Rat t = v;
    for (int k = 0; k < e[0]; ++k) t *= a;
    for (int k = 0; k < e[1]; ++k) t *= b;
    c[static_cast<std::size_t>(e[2])] += t;
  }
  return QPoly(c, Rat(0));
}

MultiPoly linear_change(const MultiPoly& f, const QMatrix& t) {
  std::vector<MultiPoly> subs;
  const auto& vars = f.vars();
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly l(vars);
    for (std::size_t j = 0; j < 3; ++j) l = l + MultiPoly::variable(vars, j).scaled(t(i, j));
    subs.push_back(l);
  }
  return f.substitute(subs);
}

// Interpolates the polynomial of degree <= deg through (k, vals[k]).
QPoly interpolate(const std::vector<Rat>& vals) {
  const std::size_t n = vals.size();
  QMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= Rat(static_cast<long>(i));
    }
  }
  const auto c = solve(v, vals, Rat(0));
  return QPoly(*c, Rat(0));
}

}  // namespace

PlaneCubic::PlaneCubic(MultiPoly f) : f_(std::move(f)) {
  if (f_.nvars() != 3 || f_.is_zero() || !f_.is_homogeneous(3))
    fail(ErrorCode::InvalidInput, "a plane cubic is a nonzero ternary cubic form");
}

ProjPoint normalize_point(const ProjPoint& p) {
  auto v = primitive_integer_vector(p);
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

bool same_point(const ProjPoint& a, const ProjPoint& b) { return normalize_point(a) == normalize_point(b); }

std::vector<ProjPoint> rational_common_zeros(const std::vector<MultiPoly>& forms_in, unsigned seed) {
  std::vector<MultiPoly> forms;
  for (const auto& f : forms_in)
    if (!f.is_zero()) forms.push_back(f);
  if (forms.size() < 2) fail(ErrorCode::InvalidInput, "need two nonzero forms for a finite zero set");
  const int deg = forms.front().total_degree();
  for (const auto& f : forms)
    if (f.nvars() != 3 || f.total_degree() != deg || !f.is_homogeneous(deg))
      fail(ErrorCode::InvalidInput, "forms must be ternary and of one degree");

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < 20; ++attempt) {
    QMatrix t(3, 3);
    for (auto i = 0u; i < 3; ++i)
      for (auto j = 0u; j < 3; ++j) t(i, j) = dist(rng) + (i == j ? 4 : 0);
    if (determinant(t) == 0) continue;
    std::vector<MultiPoly> g;
    for (const auto& f : forms) g.push_back(linear_change(f, t));
    MultiPoly ga(g.front().vars()), gb(g.front().vars());
    for (const auto& f : g) {
      ga = ga + f.scaled(Rat(dist(rng)));
      gb = gb + f.scaled(Rat(dist(rng)));
    }
    const Exponent top{0, 0, deg};
    if (sgn(ga.coeff(top)) == 0 || sgn(gb.coeff(top)) == 0) continue;
    const int rdeg = deg * deg;
    std::vector<Rat> vals;
    for (int k = 0; k <= rdeg; ++k) vals.push_back(resultant(specialize_last(ga, k, 1), specialize_last(gb, k, 1)));
    const QPoly r = interpolate(vals);
    const Rat r_inf = resultant(specialize_last(ga, 1, 0), specialize_last(gb, 1, 0));
    if (r.is_zero()) continue;

    std::vector<std::pair<Rat, Rat>> candidates;
    for (const auto& a : rational_roots(r)) candidates.emplace_back(a, Rat(1));
    if (sgn(r_inf) == 0) candidates.emplace_back(Rat(1), Rat(0));
    std::vector<ProjPoint> out;
    for (const auto& [a, b] : candidates) {
      QPoly h(Rat(0));
      for (const auto& f : g) h = gcd(h, specialize_last(f, a, b));
      if (h.is_zero()) continue;
      for (const auto& c : rational_roots(h)) {
        const std::vector<Rat> y{a, b, c};
        ProjPoint x = normalize_point(t.apply(y));
        bool ok = true;
        for (const auto& f : forms) ok = ok && sgn(f.eval(x)) == 0;
        if (!ok) continue;
        bool dup = false;
        for (const auto& p : out) dup = dup || p == x;
        if (!dup) out.push_back(x);
      }
    }
    return out;
  }
  fail(ErrorCode::InvalidInput, "common zero locus is not finite");
}

int stable_hilbert_value(const std::vector<MultiPoly>& forms, int max_degree) {
  std::vector<MultiPoly> nz;
  for (const auto& f : forms)
    if (!f.is_zero()) nz.push_back(f);
  if (nz.empty()) return -1;
  const auto h = quotient_hilbert_function(nz, max_degree);
  for (std::size_t d = 1; d + 2 < h.size(); ++d)
    if (h[d] == h[d + 1] && h[d + 1] == h[d + 2]) return static_cast<int>(h[d]);
  return -1;
}

int jacobian_degree(const PlaneCubic& c) {
  return stable_hilbert_value({c.gradient(0), c.gradient(1), c.gradient(2)});
}

std::vector<ProjPoint> rational_singular_points(const PlaneCubic& c) {
  return rational_common_zeros({c.gradient(0), c.gradient(1), c.gradient(2)});
}

std::vector<Rat> restrict_to_line(const MultiPoly& f, const ProjPoint& p, const ProjPoint& q) {
  const std::vector<std::string> st{"s", "t"};
  const auto s = MultiPoly::variable(st, 0), t = MultiPoly::variable(st, 1);
  std::vector<MultiPoly> subs;
  for (std::size_t i = 0; i < 3; ++i) subs.push_back(s.scaled(p.at(i)) + t.scaled(q.at(i)));
  const MultiPoly r = f.substitute(subs);
  const int d = f.total_degree();
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = r.coeff({i, d - i});
  return c;
}

bool line_in_curve(const MultiPoly& f, const ProjPoint& p, const ProjPoint& q) {
  for (const auto& c : restrict_to_line(f, p, q))
    if (sgn(c) != 0) return false;
  return true;
}

LineProfile line_intersection_profile(const PlaneCubic& c, const ProjPoint& p, const ProjPoint& q) {
  if (normalize_point(p) == normalize_point(q)) fail(ErrorCode::InvalidInput, "line needs two distinct points");
  const QBinaryForm r(3, restrict_to_line(c.poly(), p, q));
  if (r.is_zero()) fail(ErrorCode::LineInsideCubic, "the line lies on the cubic");
  LineProfile prof;
  prof.partition = root_multiplicity_partition(r);
  std::array<QBinaryForm, 3> grad{QBinaryForm(2, restrict_to_line(c.gradient(0), p, q)),
                                  QBinaryForm(2, restrict_to_line(c.gradient(1), p, q)),
                                  QBinaryForm(2, restrict_to_line(c.gradient(2), p, q))};
  const int inf = r.multiplicity_at_infinity();
  if (inf > 0) {
    bool sing = true;
    for (const auto& g : grad) sing = sing && sgn(g.coeff(2)) == 0;
    prof.points.push_back({inf, 1, sing});
  }
  for (const auto& [h, m] : squarefree_decomposition(r.dehomogenize()))
    for (const auto& [irr, e] : factor_rationals(h).factors) {
      (void)e;
      bool sing = true;
      for (const auto& g : grad) sing = sing && irr.divides(g.dehomogenize());
      prof.points.push_back({m, irr.degree(), sing});
    }
  return prof;
}

}  // namespace cq
