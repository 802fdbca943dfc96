#include "cq/graded/free_extension.hpp"

#include <numeric>

namespace cq {

namespace {

int exp_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::vector<Rat>> ideal_rows(const std::vector<MultiPoly>& polys, std::size_t n, int k,
                                         const std::vector<Exponent>& monos) {
  std::vector<std::vector<Rat>> rows;
  const std::vector<std::string> vars = polys.front().vars();
  for (const auto& p : polys) {
    const int dp = p.total_degree();
    if (dp < 0 || dp > k) continue;
    for (const auto& m : monomials_of_degree(n, k - dp)) {
      rows.push_back((p * MultiPoly::monomial(vars, m)).coefficients_on(monos));
    }
  }
  return rows;
}

}  // namespace

MultiPoly homogeneous_part(const MultiPoly& p, int d) {
  MultiPoly r(p.vars());
  for (const auto& [e, c] : p.terms())
    if (exp_degree(e) == d) r.add_term(e, c);
  return r;
}

std::vector<std::size_t> quotient_hilbert_function(const std::vector<MultiPoly>& polys, int max_degree) {
  if (polys.empty()) fail(ErrorCode::InvalidInput, "no polynomials");
  const std::size_t n = polys.front().nvars();
  std::vector<std::size_t> dims;
  for (int k = 0; k <= max_degree; ++k) {
    const auto monos = monomials_of_degree(n, k);
    const auto rows = ideal_rows(polys, n, k, monos);
    dims.push_back(monos.size() - (rows.empty() ? 0 : span_rank(rows, monos.size())));
  }
  return dims;
}

FreeExtension::FreeExtension(std::vector<MultiPoly> g) : g_(std::move(g)) {
  if (g_.empty()) fail(ErrorCode::InvalidInput, "empty regular sequence");
  const std::size_t m = g_.front().nvars();
  if (g_.size() != m) fail(ErrorCode::InvalidInput, "need as many polynomials as variables");
  e_ = g_.front().total_degree();
  if (e_ <= 0) fail(ErrorCode::InvalidInput, "generators must have positive degree");
  for (const auto& p : g_)
    if (p.nvars() != m || !p.is_homogeneous(e_) || p.is_zero())
      fail(ErrorCode::InvalidInput, "generators must be nonzero homogeneous of one degree");
  sigma_ = static_cast<int>(m) * (e_ - 1);
  for (std::size_t k = 0; k < m; ++k) w_vars_.push_back("w" + std::to_string(k + 1));

  // Regularity: the quotient must have Hilbert series ((1 - t^e)/(1 - t))^m.
  std::vector<Rat> expected{Rat(1)};
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Rat> next(expected.size() + static_cast<std::size_t>(e_) - 1, Rat(0));
    for (std::size_t i = 0; i < expected.size(); ++i)
      for (int j = 0; j < e_; ++j) next[i + static_cast<std::size_t>(j)] += expected[i];
    expected = std::move(next);
  }
  const auto dims = quotient_hilbert_function(g_, sigma_ + 1);
  for (int k = 0; k <= sigma_ + 1; ++k) {
    const Rat want = k <= sigma_ ? expected[static_cast<std::size_t>(k)] : Rat(0);
    if (Rat(static_cast<long>(dims[static_cast<std::size_t>(k)])) != want)
      fail(ErrorCode::NotBasepointFree, "the generators do not form a regular sequence");
  }

  const auto& vars = g_.front().vars();
  for (int k = 0; k <= sigma_; ++k) {
    const auto monos = monomials_of_degree(m, k);
    const auto rows = ideal_rows(g_, m, k, monos);
    std::vector<bool> pivot(monos.size(), false);
    if (!rows.empty())
      for (auto c : rref(QMatrix::from_rows(rows, monos.size())).pivots) pivot[c] = true;
    for (std::size_t c = monos.size(); c-- > 0;) {
      if (pivot[c]) continue;
      basis_.push_back(MultiPoly::monomial(vars, monos[c]));
      basis_deg_.push_back(k);
    }
  }
}

std::vector<std::size_t> FreeExtension::basis_indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_deg_[i] == d) out.push_back(i);
  return out;
}

std::size_t FreeExtension::socle_index() const {
  const auto idx = basis_indices_of_degree(sigma_);
  if (idx.size() != 1) fail(ErrorCode::InternalInconsistency, "socle is not one-dimensional");
  return idx.front();
}

std::vector<std::size_t> FreeExtension::quotient_hilbert() const {
  std::vector<std::size_t> h(static_cast<std::size_t>(sigma_) + 1, 0);
  for (int d : basis_deg_) ++h[static_cast<std::size_t>(d)];
  return h;
}

void FreeExtension::set_basis(std::vector<MultiPoly> basis) {
  if (basis.size() != basis_.size()) fail(ErrorCode::InvalidInput, "basis has the wrong size");
  std::vector<int> deg;
  for (const auto& b : basis) {
    const int d = b.total_degree();
    if (d < 0 || !b.is_homogeneous(d)) fail(ErrorCode::InvalidInput, "basis elements must be homogeneous");
    deg.push_back(d);
  }
  std::vector<int> old = basis_deg_, now = deg;
  std::sort(old.begin(), old.end());
  std::sort(now.begin(), now.end());
  if (old != now) fail(ErrorCode::InvalidInput, "basis degrees do not match the quotient");
  const std::size_t m = nvars();
  for (int k = 0; k <= sigma_; ++k) {
    const auto monos = monomials_of_degree(m, k);
    auto rows = ideal_rows(g_, m, k, monos);
    const std::size_t before = rows.empty() ? 0 : span_rank(rows, monos.size());
    std::size_t added = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (deg[i] == k) {
        rows.push_back(basis[i].coefficients_on(monos));
        ++added;
      }
    if (span_rank(rows, monos.size()) != before + added)
      fail(ErrorCode::InvalidInput, "proposed elements are dependent modulo the ideal");
  }
  std::lock_guard<std::mutex> lock(mu_);
  basis_ = std::move(basis);
  basis_deg_ = std::move(deg);
  solvers_.clear();
}

MultiPoly FreeExtension::base_monomial(const Exponent& a) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = powers_.find(a);
    if (it != powers_.end()) return it->second;
  }
  MultiPoly r = MultiPoly::constant(vars(), Rat(1));
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0) r = r * g_[k].pow(a[k]);
  std::lock_guard<std::mutex> lock(mu_);
  powers_.emplace(a, r);
  return r;
}

MultiPoly FreeExtension::base_polynomial(const MultiPoly& r) const {
  MultiPoly out(vars());
  for (const auto& [a, c] : r.terms()) out = out + base_monomial(a).scaled(c);
  return out;
}

const FreeExtension::DegreeSolver& FreeExtension::solver(int d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = solvers_.find(d);
    if (it != solvers_.end()) return it->second;
  }
  DegreeSolver s;
  s.monomials = monomials_of_degree(nvars(), d);
  std::vector<std::vector<Rat>> cols;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int rest = d - basis_deg_[i];
    if (rest < 0 || rest % e_ != 0) continue;
    for (const auto& a : monomials_of_degree(nvars(), rest / e_)) {
      cols.push_back((base_monomial(a) * basis_[i]).coefficients_on(s.monomials));
      s.labels.emplace_back(i, a);
    }
  }
  if (cols.size() != s.monomials.size()) fail(ErrorCode::InternalInconsistency, "module is not free of the expected rank");
  const QMatrix c = QMatrix::from_rows(cols, s.monomials.size()).transpose();
  auto inv = inverse(c);
  if (!inv) fail(ErrorCode::InternalInconsistency, "basis does not generate freely");
  s.inverse = std::move(*inv);
  std::lock_guard<std::mutex> lock(mu_);
  return solvers_.emplace(d, std::move(s)).first->second;
}

std::vector<MultiPoly> FreeExtension::coordinates(const MultiPoly& p) const {
  std::vector<MultiPoly> out(basis_.size(), MultiPoly(w_vars_));
  std::map<int, MultiPoly> parts;
  for (const auto& [e, c] : p.terms()) {
    auto [it, ins] = parts.try_emplace(exp_degree(e), MultiPoly(p.vars()));
    it->second.add_term(e, c);
  }
  for (const auto& [d, part] : parts) {
    const auto& s = solver(d);
    const auto x = s.inverse.apply(part.coefficients_on(s.monomials));
    for (std::size_t k = 0; k < x.size(); ++k)
      if (sgn(x[k]) != 0) out[s.labels[k].first].add_term(s.labels[k].second, x[k]);
  }
  return out;
}

MultiPoly FreeExtension::trace(const MultiPoly& p) const { return coordinates(p)[socle_index()]; }

std::vector<MultiPoly> FreeExtension::dual_basis() const {
  const auto& vars = g_.front().vars();
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int di = sigma_ - basis_deg_[i];
    const auto monos = monomials_of_degree(nvars(), di);
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const int gap = basis_deg_[j] - basis_deg_[i];
      if (gap < 0 || gap % e_ != 0) continue;
      const auto rmonos = monomials_of_degree(nvars(), gap / e_);
      std::vector<std::vector<Rat>> block(rmonos.size(), std::vector<Rat>(monos.size(), Rat(0)));
      for (std::size_t c = 0; c < monos.size(); ++c) {
        const auto t = trace(basis_[j] * MultiPoly::monomial(vars, monos[c]));
        for (std::size_t r = 0; r < rmonos.size(); ++r) block[r][c] = t.coeff(rmonos[r]);
      }
      for (std::size_t r = 0; r < rmonos.size(); ++r) {
        rows.push_back(block[r]);
        rhs.push_back(j == i ? Rat(1) : Rat(0));
      }
    }
    const auto x = solve(QMatrix::from_rows(rows, monos.size()), rhs, Rat(0));
    if (!x) fail(ErrorCode::InternalInconsistency, "trace pairing is degenerate");
    out.push_back(from_coefficients(vars, monos, *x));
  }
  return out;
}

}  // namespace cq
