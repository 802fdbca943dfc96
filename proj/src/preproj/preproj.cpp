#include "cq/preproj/preproj.hpp"

#include <random>

namespace cq {

namespace {

QMatrix gram_for(const MultTable& t, const std::vector<Rat>& lambda) {
  const std::size_t n = t.size();
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g(i, j) += t[i][j][k] * lambda[k];
  return g;
}

void validate_table(const MultTable& t) {
  const std::size_t n = t.size();
  if (n == 0) fail(ErrorCode::InvalidInput, "empty multiplication table");
  for (const auto& row : t) {
    if (row.size() != n) fail(ErrorCode::InvalidInput, "multiplication table must be n x n x n");
    for (const auto& v : row)
      if (v.size() != n) fail(ErrorCode::InvalidInput, "multiplication table must be n x n x n");
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (t[0][j][k] != (j == k ? 1 : 0) || t[j][0][k] != (j == k ? 1 : 0))
        fail(ErrorCode::InvalidInput, "basis element 0 must be the unit");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] != t[j][i]) fail(ErrorCode::NotCommutative, "multiplication table is not commutative");
  auto unit = [n](std::size_t i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(t, multiply(t, unit(i), unit(j)), unit(k)) != multiply(t, unit(i), multiply(t, unit(j), unit(k))))
          fail(ErrorCode::NotAssociative, "multiplication table is not associative");
}

}  // namespace

std::vector<Rat> multiply(const MultTable& t, const std::vector<Rat>& u, const std::vector<Rat>& v) {
  const std::size_t n = t.size();
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0) continue;
      const Rat s = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += s * t[i][j][k];
    }
  }
  return out;
}

FrobeniusPair make_frobenius_pair(const MultTable& table, const std::vector<Rat>& lambda) {
  validate_table(table);
  if (lambda.size() != table.size()) fail(ErrorCode::InvalidInput, "functional has the wrong length");
  FrobeniusPair p{table, lambda, gram_for(table, lambda)};
  if (sgn(determinant(p.gram)) == 0) fail(ErrorCode::NotFrobenius, "the given functional is degenerate");
  return p;
}

FrobeniusPair make_frobenius_pair(const MultTable& table) {
  validate_table(table);
  const std::size_t n = table.size();
  // det Gram(lambda) has degree <= n in each coordinate, so vanishing on the
  // grid {0..n}^n certifies that it vanishes identically.
  std::vector<long> digits(n, 0);
  std::vector<std::vector<Rat>> order;
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rat> v(n, Rat(0));
    v[k] = 1;
    order.push_back(v);
  }
  for (const auto& v : order)
    if (sgn(determinant(gram_for(table, v))) != 0) return make_frobenius_pair(table, v);
  while (true) {
    std::vector<Rat> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = digits[k];
    if (sgn(determinant(gram_for(table, v))) != 0) return make_frobenius_pair(table, v);
    std::size_t k = 0;
    while (k < n && ++digits[k] > static_cast<long>(n)) digits[k++] = 0;
    if (k == n) break;
  }
  fail(ErrorCode::NotFrobenius, "no nondegenerate trace functional exists");
}

MultTable algebra_from_polynomial(const QPoly& monic) {
  const int n = monic.degree();
  if (n < 1 || monic.lc() != 1) fail(ErrorCode::InvalidInput, "need a monic polynomial of positive degree");
  const auto un = static_cast<std::size_t>(n);
  MultTable t(un, std::vector<std::vector<Rat>>(un));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QPoly r = QPoly::monomial(Rat(1), i + j) % monic;
      std::vector<Rat> v(un, Rat(0));
      for (int k = 0; k <= r.degree(); ++k) v[static_cast<std::size_t>(k)] = r.coeff(k);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  return t;
}

MultTable split_algebra(std::size_t n) {
  // Basis 1 = sum of idempotents, then idempotents p_1..p_{n-1}; p_0 = 1 - sum.
  MultTable t(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
  for (std::size_t j = 0; j < n; ++j) {
    t[0][j][j] = 1;
    t[j][0][j] = 1;
  }
  for (std::size_t i = 1; i < n; ++i) t[i][i][i] = 1;
  return t;
}

MultTable monomial_algebra(std::size_t vars, const std::vector<std::vector<int>>& basis_exponents) {
  const std::size_t n = basis_exponents.size();
  if (n == 0 || basis_exponents[0] != std::vector<int>(vars, 0))
    fail(ErrorCode::InvalidInput, "first basis monomial must be 1");
  MultTable t(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> e(vars);
      for (std::size_t v = 0; v < vars; ++v) e[v] = basis_exponents[i][v] + basis_exponents[j][v];
      for (std::size_t k = 0; k < n; ++k)
        if (basis_exponents[k] == e) t[i][j][k] = 1;
    }
  return t;
}

PairDualBases dual_bases_pair(const FrobeniusPair& p, const QMatrix& basis_change) {
  const std::size_t n = p.dim();
  const auto inv_change = inverse(basis_change);
  if (!inv_change) fail(ErrorCode::InvalidInput, "basis change is not invertible");
  PairDualBases d;
  for (std::size_t i = 0; i < n; ++i) d.e.push_back(basis_change.col(i));
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = multiply(p.table, d.e[i], d.e[j]);
      for (std::size_t k = 0; k < n; ++k) g(i, j) += prod[k] * p.lambda[k];
    }
  const auto gi = inverse(g);
  if (!gi) fail(ErrorCode::NotFrobenius, "trace form is degenerate");
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> f(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) f[c] += (*gi)(k, j) * d.e[k][c];
    d.f.push_back(f);
  }
  d.delta_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = multiply(p.table, d.e[i], d.f[j]);
      Rat v = 0;
      for (std::size_t k = 0; k < n; ++k) v += prod[k] * p.lambda[k];
      if (v != (i == j ? 1 : 0)) d.delta_ok = false;
    }
  d.casimir = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d.casimir(a, b) += d.e[i][a] * d.f[i][b];
  d.symmetric = d.casimir == d.casimir.transpose();
  return d;
}

PairDualBases dual_bases_pair(const FrobeniusPair& p) {
  return dual_bases_pair(p, QMatrix::identity(p.dim(), Rat(0)));
}

PreprojectiveH preprojective_H(const FrobeniusPair& p) {
  const std::size_t n = p.dim();
  if (n < 2) fail(ErrorCode::InvalidInput, "D/C must be nonzero");
  const auto d = dual_bases_pair(p);
  const std::size_t m = n - 1;
  // r(u) = sum_i u e_i (x) f_i, projected to D/C (x) D/C.
  std::vector<std::vector<Rat>> rows;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Rat> unit(n, Rat(0));
    unit[u] = 1;
    std::vector<Rat> row(m * m, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      const auto ue = multiply(p.table, unit, d.e[i]);
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) row[(a - 1) * m + (b - 1)] += ue[a] * d.f[i][b];
    }
    rows.push_back(row);
  }
  PreprojectiveH h;
  h.generators = m;
  const auto basis = row_space_basis(rows, m * m, Rat(0));
  h.relation_dim = basis.size();
  h.relation_matrix = basis.empty() ? QMatrix(0, m * m) : QMatrix::from_rows(basis, m * m);
  h.symmetric = true;
  for (const auto& r : basis) {
    NCRelation rel;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (r[a * m + b] != r[b * m + a]) h.symmetric = false;
        if (sgn(r[a * m + b]) != 0) rel.terms.push_back({r[a * m + b], {static_cast<int>(a), static_cast<int>(b)}});
      }
    h.relations.push_back(std::move(rel));
  }
  return h;
}

std::vector<std::size_t> hilbert_dims_H(const PreprojectiveH& h, int n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "negative degree bound");
  if (n > 8) fail(ErrorCode::DegreeBoundExceeded, "H is computed through degree 8");
  return GradedQuotient(std::vector<int>(h.generators, 1), h.relations, n).hilbert();
}

CliffordComparison clifford_comparison(const FrobeniusPair& p, int n) {
  if (n > 8) fail(ErrorCode::DegreeBoundExceeded, "comparison is computed through degree 8");
  const auto h = preprojective_H(p);
  const std::size_t m = h.generators;
  if (!h.symmetric) fail(ErrorCode::InternalInconsistency, "relations of H are not symmetric");

  // Sym^2 F as symmetric m x m matrices; Q = Sym^2 F / R is dual to the
  // symmetric matrices orthogonal to R.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) pairs.push_back({a, b});
  QMatrix rel_sym(h.relation_dim, pairs.size());
  for (std::size_t r = 0; r < h.relation_dim; ++r)
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const auto [a, b] = pairs[c];
      rel_sym(r, c) = a == b ? h.relation_matrix(r, a * m + b) : Rat(2) * h.relation_matrix(r, a * m + b);
    }
  const auto lambdas = kernel_basis(rel_sym, Rat(0));

  CliffordComparison out;
  out.q_dim = lambdas.size();
  const int nq = static_cast<int>(out.q_dim);
  const int first_q = static_cast<int>(m);
  std::vector<int> degrees(m, 1);
  degrees.insert(degrees.end(), out.q_dim, 2);
  std::vector<NCRelation> rels;
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [a, b] = pairs[c];
    NCRelation r;
    r.terms.push_back({Rat(1), {static_cast<int>(a), static_cast<int>(b)}});
    r.terms.push_back({Rat(1), {static_cast<int>(b), static_cast<int>(a)}});
    for (int k = 0; k < nq; ++k) {
      const Rat& l = lambdas[static_cast<std::size_t>(k)][c];
      if (sgn(l) != 0) r.terms.push_back({Rat(-2) * l, {first_q + k}});
    }
    rels.push_back(std::move(r));
  }
  for (int k = 0; k < nq; ++k) {
    for (int a = 0; a < static_cast<int>(m); ++a)
      rels.push_back({{{Rat(1), {a, first_q + k}}, {Rat(-1), {first_q + k, a}}}});
    for (int l = k + 1; l < nq; ++l) rels.push_back({{{Rat(1), {first_q + k, first_q + l}}, {Rat(-1), {first_q + l, first_q + k}}}});
  }
  const GradedQuotient cl(degrees, rels, n);
  const GradedQuotient hq(std::vector<int>(m, 1), h.relations, n);

  out.h_dims = hq.hilbert();
  out.clifford_dims = cl.hilbert();
  std::vector<int> f_gens(m);
  for (std::size_t a = 0; a < m; ++a) f_gens[a] = static_cast<int>(a);
  out.image_dims = subalgebra_span_dims(cl, f_gens);
  for (int d = 0; d <= n; ++d) {
    const std::size_t k = static_cast<std::size_t>(d / 2);
    out.bookkeeping_dims.push_back(d % 2 == 0 ? (k + 1) + 3 * k : 3 * (k + 1) + k);
  }
  out.relations_vanish = true;
  if (n >= 2)
    for (const auto& r : h.relations) {
      const auto v = cl.reduce_relation(r);
      for (const auto& x : v)
        if (sgn(x) != 0) out.relations_vanish = false;
    }
  out.surjective = out.image_dims == out.clifford_dims;
  out.isomorphism = out.relations_vanish && out.surjective && out.h_dims == out.clifford_dims;
  return out;
}

MultTable mult_table_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "pair must be a JSON object");
  if (j.contains("polynomial")) return algebra_from_polynomial(QPoly(vector_from_json(j.at("polynomial")), Rat(0)));
  if (j.contains("split")) return split_algebra(j.at("split").get<std::size_t>());
  if (j.contains("monomial")) {
    const Json& m = j.at("monomial");
    return monomial_algebra(m.at("vars").get<std::size_t>(), m.at("basis").get<std::vector<std::vector<int>>>());
  }
  if (!j.contains("table")) fail(ErrorCode::InvalidInput, "pair needs a table, polynomial, split or monomial entry");
  MultTable t;
  for (const auto& row : j.at("table")) {
    std::vector<std::vector<Rat>> r;
    for (const auto& v : row) r.push_back(vector_from_json(v));
    t.push_back(std::move(r));
  }
  return t;
}

Json frobenius_pair_to_json(const FrobeniusPair& p) {
  Json j;
  j["dimension"] = p.dim();
  j["lambda"] = vector_to_json(p.lambda);
  j["gram"] = matrix_to_json(p.gram);
  return j;
}

}  // namespace cq
