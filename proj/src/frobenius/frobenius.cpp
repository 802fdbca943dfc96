#include "cq/frobenius/frobenius.hpp"

#include <utility>

namespace cq {

namespace {

constexpr std::array<std::pair<int, int>, 6> kSymPairs{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

std::size_t sym_index(int p, int q) {
  if (p > q) std::swap(p, q);
  for (std::size_t k = 0; k < kSymPairs.size(); ++k)
    if (kSymPairs[k].first == p && kSymPairs[k].second == q) return k;
  fail(ErrorCode::InternalInconsistency, "bad symmetric index");
}

// Sym^2 of a linear map between 3-dimensional spaces, on the u_p u_q bases.
QMatrix sym_square(const QMatrix& m) {
  QMatrix out(6, 6);
  for (std::size_t c = 0; c < 6; ++c) {
    const auto [p, q] = kSymPairs[c];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Rat v = m(static_cast<std::size_t>(a), static_cast<std::size_t>(p)) *
                      m(static_cast<std::size_t>(b), static_cast<std::size_t>(q));
        if (sgn(v) == 0) continue;
        // (sum_a m_ap u_a)(sum_b m_bq u_b) in the commutative square.
        out(sym_index(a, b), c) += v;
      }
  }
  return out;
}

Rat constant_term(const MultiPoly& p) { return p.coeff(Exponent(p.nvars(), 0)); }

long r_dim(int s_degree) {
  if (s_degree < 0 || s_degree % 2 != 0) return 0;
  const long k = s_degree / 2;
  return (k + 1) * (k + 2) / 2;
}

}  // namespace

std::vector<Rat> FrobeniusQuotient::reduce(const MultiPoly& p) const {
  const auto coords = ext->coordinates(p);
  std::vector<Rat> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(constant_term(c));
  return out;
}

FrobeniusQuotient frobenius_quotient(const NetOfConics& net) {
  const auto q = net.quadrics();
  auto ext = std::make_shared<FreeExtension>(std::vector<MultiPoly>(q.begin(), q.end()));
  if (ext->quotient_hilbert() != std::vector<std::size_t>{1, 3, 3, 1})
    fail(ErrorCode::InternalInconsistency, "quotient of a regular net must have dimensions 1,3,3,1");

  const auto& vars = xyz_vars();
  const auto deg2 = ext->basis_indices_of_degree(2);
  const MultiPoly socle = ext->basis()[ext->socle_index()];
  QMatrix pairing(3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j)
      pairing(k, j) = constant_term(ext->trace(MultiPoly::variable(vars, k) * ext->basis()[deg2[j]]));
  const auto inv = inverse(pairing.transpose());
  if (!inv) fail(ErrorCode::NotFrobenius, "trace pairing A1 x A2 -> A3 is degenerate");

  std::vector<MultiPoly> basis{MultiPoly::constant(vars, Rat(1))};
  for (std::size_t k = 0; k < 3; ++k) basis.push_back(MultiPoly::variable(vars, k));
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly e(vars);
    for (std::size_t j = 0; j < 3; ++j) e = e + ext->basis()[deg2[j]].scaled((*inv)(i, j));
    basis.push_back(e);
  }
  basis.push_back(socle);
  ext->set_basis(basis);

  FrobeniusQuotient a;
  a.grams = net.grams();
  a.ext = ext;
  a.basis = basis;
  a.degrees = {0, 1, 1, 1, 2, 2, 2, 3};
  a.hilbert = ext->quotient_hilbert();
  a.table.assign(8, std::vector<std::vector<Rat>>(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) a.table[i][j] = a.reduce(basis[i] * basis[j]);
  return a;
}

StructureConstants structure_constants(const FrobeniusQuotient& a) {
  StructureConstants s;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l) s.c[i][j][l] = a.table[i + 1][j + 1][l + 4];
  s.totally_symmetric = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l) {
        const Rat& v = s.c[i][j][l];
        if (v != s.c[j][i][l] || v != s.c[i][l][j] || v != s.c[l][j][i] || v != s.c[j][l][i] || v != s.c[l][i][j])
          s.totally_symmetric = false;
      }
  return s;
}

DualBases dual_bases(const FrobeniusQuotient& a, int degree_bound) {
  if (degree_bound < 3) fail(ErrorCode::BoundTooSmall, "dual bases need degrees through 3");
  DualBases d;
  d.e = a.basis;
  d.f = a.ext->dual_basis();

  d.delta_ok = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const MultiPoly t = a.ext->trace(d.e[i] * d.f[j]);
      const MultiPoly want = MultiPoly::constant(a.ext->base_vars(), Rat(i == j ? 1 : 0));
      if (t != want) d.delta_ok = false;
    }
  const auto one = MultiPoly::constant(xyz_vars(), Rat(1));
  d.normalization_ok = d.e[0] == one && d.f[7] == one && d.f[4] == d.e[1] && d.f[5] == d.e[2] && d.f[6] == d.e[3];

  // sum_i e_i (x) f_i has coordinate matrix F (rows: coordinates of f_i),
  // and sum_i f_i (x) e_i has its transpose.
  std::vector<std::vector<MultiPoly>> coords;
  for (const auto& f : d.f) coords.push_back(a.ext->coordinates(f));
  d.central_ok = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (coords[i][j] != coords[j][i]) d.central_ok = false;
  return d;
}

DualBases dual_bases(const NetOfConics& net, int degree_bound) {
  return dual_bases(frobenius_quotient(net), degree_bound);
}

AlphaBetaReport alpha_beta_check(const FrobeniusQuotient& a) {
  AlphaBetaReport r;
  const auto s = structure_constants(a);
  const auto fs = a.ext->dual_basis();

  // fbar_j on e4..e6
  QMatrix fbar(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto v = a.reduce(fs[j + 1]);
    for (std::size_t l = 0; l < 3; ++l) fbar(l, j) = v[l + 4];
  }

  // alpha(e_i) = sum_j (e_i e_j) . fbar_j in Sym^2 A2.
  r.alpha = QMatrix(6, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t m = 0; m < 3; ++m) {
          const Rat v = a.table[i + 1][j + 1][l + 4] * fbar(m, j);
          if (sgn(v) != 0) r.alpha(sym_index(static_cast<int>(l), static_cast<int>(m)), i) += v;
        }

  // Trace identifications A1 -> A2^v and A2 -> A1^v.
  QMatrix t12(3, 3), t21(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      t12(j, i) = a.trace(a.table[i + 1][j + 4]);
      t21(j, i) = a.trace(a.table[i + 4][j + 1]);
    }
  // mult^v: A2^v -> Sym^2 A1^v, lambda -> sum_{p,q} lambda(e_p e_q) u_p u_q.
  QMatrix mult_dual(6, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        mult_dual(sym_index(p, q), k) += s.c[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)][k];
  r.lower_alpha = mult_dual * t12;
  r.middle = sym_square(t21);

  const QMatrix top = r.middle * r.alpha;
  r.alpha_square_commutes = false;
  for (std::size_t k = 0; k < top.data().size(); ++k)
    if (sgn(r.lower_alpha.data()[k]) != 0) {
      r.alpha_scalar = top.data()[k] / r.lower_alpha.data()[k];
      r.alpha_square_commutes = top == r.lower_alpha.scaled(r.alpha_scalar);
      break;
    }

  // beta(e_{i+3} e_{j+3}) = phi(e_i^v e_j^v); phi(u_p u_q)_m = (B_m)_pq.
  r.beta = QMatrix(3, 6);
  r.phi = QMatrix(3, 6);
  for (std::size_t c = 0; c < 6; ++c) {
    const auto [p, q] = kSymPairs[c];
    for (std::size_t m = 0; m < 3; ++m) {
      const Rat v = a.grams[m](static_cast<std::size_t>(p), static_cast<std::size_t>(q));
      r.beta(m, c) = v;
      r.phi(m, c) = v;
    }
  }
  r.beta_square_commutes = r.phi * r.middle == r.beta;
  r.beta_alpha_zero = (r.beta * r.alpha).is_zero_matrix();
  r.rank_alpha = rank(r.alpha);
  r.rank_beta = rank(r.beta);
  return r;
}

CokerPhiReport coker_phi_hilbert_check(const FrobeniusQuotient& a, int n) {
  if (n < 0) fail(ErrorCode::InvalidInput, "negative degree bound");
  if (n > 12) fail(ErrorCode::BoundTooSmall, "coker check is limited to degree 12");
  const auto fs = a.ext->dual_basis();
  QMatrix fbar(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto v = a.reduce(fs[j + 1]);
    for (std::size_t l = 0; l < 3; ++l) fbar(l, j) = v[l + 4];
  }
  CokerPhiReport rep;
  for (int d = 0; d <= n; ++d) {
    const long target = 6 * r_dim(d - 4);
    long image = 0;
    if (target > 0 && d - 3 >= 0) {
      const auto rmonos = monomials_of_degree(3, (d - 4) / 2);
      std::vector<std::vector<Rat>> rows;
      for (const auto& mono : monomials_of_degree(3, d - 3)) {
        const MultiPoly u = MultiPoly::monomial(xyz_vars(), mono);
        std::vector<Rat> row(static_cast<std::size_t>(target), Rat(0));
        for (std::size_t i = 0; i < 3; ++i) {
          const auto coords = a.ext->coordinates(u * a.basis[i + 1]);
          for (std::size_t k = 0; k < 3; ++k) {
            const auto rc = coords[k + 4].coefficients_on(rmonos);
            for (std::size_t l = 0; l < 3; ++l) {
              if (sgn(fbar(l, i)) == 0) continue;
              const std::size_t pair = sym_index(static_cast<int>(k), static_cast<int>(l));
              for (std::size_t t = 0; t < rmonos.size(); ++t)
                row[pair * rmonos.size() + t] += rc[t] * fbar(l, i);
            }
          }
        }
        rows.push_back(std::move(row));
      }
      image = static_cast<long>(span_rank(rows, static_cast<std::size_t>(target)));
    }
    rep.coker_dims.push_back(target - image);
    rep.omega_dims.push_back(3 * r_dim(d - 4) - r_dim(d - 6));
  }
  rep.equal = rep.coker_dims == rep.omega_dims;
  return rep;
}

CokerPhiReport coker_phi_hilbert_check(const NetOfConics& net, int n) {
  return coker_phi_hilbert_check(frobenius_quotient(net), n);
}

}  // namespace cq
