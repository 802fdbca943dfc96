#include "cq/correspondence/quadruple.hpp"

#include <cstdlib>
#include <numeric>

#include "cq/graded/free_extension.hpp"

namespace cq {

namespace {

const std::vector<std::string>& uv_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

MultiPoly to_multipoly(const QBinaryForm& f) {
  MultiPoly p(uv_vars());
  for (int i = 0; i <= f.degree(); ++i) p.add_term({i, f.degree() - i}, f.coeff(i));
  return p;
}

QBinaryForm to_binary(const MultiPoly& p, int degree) {
  std::vector<Rat> c;
  for (int i = 0; i <= degree; ++i) c.push_back(p.coeff({i, degree - i}));
  return QBinaryForm(degree, std::move(c));
}

Rat bilinear(const QMatrix& g, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += a[i] * g(i, j) * b[j];
  return s;
}

QBinaryForm evaluate_on(const QMatrix& g, const std::array<QBinaryForm, 3>& z) {
  QBinaryForm acc = QBinaryForm::zero(2 * z[0].degree(), Rat(0));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (sgn(g(a, b)) != 0) acc = acc + (z[a] * z[b]).scaled(g(a, b));
  return acc;
}

// Coefficient matrix of three binary quadrics; column k is the monomial
// x^(2-k) y^k, so the image of [a:b] is M * (a^2, ab, b^2).
QMatrix quadric_columns(const std::array<QBinaryForm, 3>& z) {
  QMatrix m(3, 3, Rat(0));
  for (std::size_t a = 0; a < 3; ++a)
    for (int k = 0; k < 3; ++k) m(a, static_cast<std::size_t>(k)) = z[a].coeff(2 - k);
  return m;
}

std::array<QBinaryForm, 3> quadrics_from_columns(const QMatrix& m) {
  std::array<QBinaryForm, 3> z;
  for (std::size_t a = 0; a < 3; ++a) z[a] = QBinaryForm(2, {m(a, 2), m(a, 1), m(a, 0)});
  return z;
}

std::vector<Rat> flatten_sym(const QMatrix& g) {
  return {g(0, 0), g(0, 1), g(0, 2), g(1, 1), g(1, 2), g(2, 2)};
}

QMatrix sym_from(std::vector<Rat> v) {
  v = normalize_point(v);
  QMatrix g(3, 3, Rat(0));
  g(0, 0) = v[0];
  g(0, 1) = g(1, 0) = v[1];
  g(0, 2) = g(2, 0) = v[2];
  g(1, 1) = v[3];
  g(1, 2) = g(2, 1) = v[4];
  g(2, 2) = v[5];
  return g;
}

void require_usable(const AlgebraicQuadruple& q) {
  const auto v = validate_quadruple(q);
  if (!v.xi_nonzero) fail(ErrorCode::InvalidInput, "xi must be nonzero");
  if (!v.basepoint_free) fail(ErrorCode::NotBasepointFree, "the net has a basepoint");
  if (!v.off_discriminant) fail(ErrorCode::OnDiscriminant, "xi lies on the discriminant cubic");
}

std::vector<std::string> invariants(const NetOfConics& net, const BinaryQuarticPencil& p) {
  const auto c = classify_net(net);
  return {std::string("net type ") + net_type_name(c.type), "double lines " + std::to_string(c.double_lines),
          "discriminant singular scheme degree " + std::to_string(c.jacobian_degree),
          "pencil symbol " + symbol_to_string(symbol(p).partitions)};
}

}  // namespace

QuadrupleValidation validate_quadruple(const AlgebraicQuadruple& q) {
  QuadrupleValidation v;
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : q.net.grams()) rows.push_back(flatten_sym(g));
  v.phi_surjective = span_rank(rows, 6) == 3;
  v.basepoint_free = is_basepoint_free(q.net);
  v.xi_nonzero = q.xi.size() == 3 && std::any_of(q.xi.begin(), q.xi.end(), [](const Rat& x) { return sgn(x) != 0; });
  v.off_discriminant = v.xi_nonzero && sgn(determinant(xi_conic(q))) != 0;
  return v;
}

QMatrix xi_conic(const AlgebraicQuadruple& q) {
  if (q.xi.size() != 3) fail(ErrorCode::InvalidInput, "xi must have three coordinates");
  return q.net.member(q.xi);
}

std::array<QBinaryForm, 3> parametrize_conic(const QMatrix& gram, const ProjPoint& pt) {
  if (gram.rows() != 3 || gram.cols() != 3 || !gram.is_symmetric())
    fail(ErrorCode::InvalidInput, "conic must be a symmetric 3x3 matrix");
  if (sgn(determinant(gram)) == 0) fail(ErrorCode::SingularConic, "the conic is singular");
  if (pt.size() != 3 || std::all_of(pt.begin(), pt.end(), [](const Rat& x) { return sgn(x) == 0; }))
    fail(ErrorCode::InvalidInput, "point must be a nonzero triple");
  if (sgn(bilinear(gram, pt, pt)) != 0) fail(ErrorCode::PointNotOnConic, "the point is not on the conic");

  // a spans the tangent line at p together with p, b completes a basis.
  const std::vector<Rat> gp = gram.apply(pt);
  std::vector<Rat> a;
  for (const auto& k : kernel_basis(QMatrix::from_rows({gp}, 3), Rat(0)))
    if (span_rank(std::vector<std::vector<Rat>>{pt, k}, 3) == 2) {
      a = k;
      break;
    }
  std::vector<Rat> b;
  for (std::size_t i = 0; i < 3 && b.empty(); ++i) {
    std::vector<Rat> e(3, Rat(0));
    e[i] = 1;
    if (span_rank(std::vector<std::vector<Rat>>{pt, a, e}, 3) == 3) b = e;
  }
  if (a.empty() || b.empty()) fail(ErrorCode::InternalInconsistency, "could not complete the tangent frame");

  // v(s,t) = Q(w) p - 2 B(p,w) w with w = s a + t b; B(p,a) = 0.
  const Rat qa = bilinear(gram, a, a), qab = bilinear(gram, a, b), qb = bilinear(gram, b, b);
  const Rat pb = bilinear(gram, pt, b);
  std::array<QBinaryForm, 3> z;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rat s2 = qa * pt[i];
    const Rat st = Rat(2) * qab * pt[i] - Rat(2) * pb * a[i];
    const Rat t2 = qb * pt[i] - Rat(2) * pb * b[i];
    z[i] = QBinaryForm(2, {t2, st, s2});
  }
  if (!evaluate_on(gram, z).is_zero()) fail(ErrorCode::InternalInconsistency, "parametrization leaves the conic");
  if (rank(quadric_columns(z)) != 3) fail(ErrorCode::InternalInconsistency, "parametrization is not an embedding");
  return z;
}

std::optional<ProjPoint> find_rational_point(const QMatrix& gram, int height_bound) {
  if (height_bound < 1) return std::nullopt;
  for (int h = 1; h <= height_bound; ++h)
    for (int x = h; x >= 0; --x)
      for (int y = h; y >= -h; --y)
        for (int z = h; z >= -h; --z) {
          if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != h) continue;
          if (x == 0 && (y < 0 || (y == 0 && z <= 0))) continue;
          if (std::gcd(std::gcd(x, y), z) != 1) continue;
          const ProjPoint p{Rat(x), Rat(y), Rat(z)};
          if (sgn(bilinear(gram, p, p)) == 0) return p;
        }
  return std::nullopt;
}

BinaryQuarticPencil quadruple_to_pencil(const AlgebraicQuadruple& q, const ProjPoint& pt) {
  require_usable(q);
  const auto z = parametrize_conic(xi_conic(q), pt);
  std::array<QBinaryForm, 3> n;
  for (std::size_t m = 0; m < 3; ++m) n[m] = evaluate_on(q.net.gram(m), z);
  QBinaryForm along = QBinaryForm::zero(4, Rat(0));
  for (std::size_t m = 0; m < 3; ++m) along = along + n[m].scaled(q.xi[m]);
  if (!along.is_zero()) fail(ErrorCode::InternalInconsistency, "the image of the conic leaves the line ker xi");

  const auto w = kernel_basis(QMatrix::from_rows({q.xi}, 3), Rat(0));
  QMatrix basis(3, 2, Rat(0));
  for (std::size_t m = 0; m < 3; ++m) {
    basis(m, 0) = w.at(0)[m];
    basis(m, 1) = w.at(1)[m];
  }
  std::vector<Rat> c1, c2;
  for (int i = 0; i <= 4; ++i) {
    const auto sol = solve(basis, {n[0].coeff(i), n[1].coeff(i), n[2].coeff(i)}, Rat(0));
    if (!sol) fail(ErrorCode::InternalInconsistency, "image point outside ker xi");
    c1.push_back((*sol)[0]);
    c2.push_back((*sol)[1]);
  }
  BinaryQuarticPencil p(QBinaryForm(4, c1), QBinaryForm(4, c2));
  if (!is_basepoint_free(p)) fail(ErrorCode::InternalInconsistency, "derived pencil has a basepoint");
  return p;
}

PencilQuadruple pencil_to_quadruple(const BinaryQuarticPencil& p) {
  if (!is_basepoint_free(p)) fail(ErrorCode::NotBasepointFree, "the quartics share a root");
  const FreeExtension ext({to_multipoly(p.f1()), to_multipoly(p.f2())});
  const auto deg2 = ext.basis_indices_of_degree(2);
  const auto deg4 = ext.basis_indices_of_degree(4);
  if (deg2.size() != 3 || deg4.size() != 3) fail(ErrorCode::InternalInconsistency, "unexpected quotient Hilbert function");
  const auto dual = ext.dual_basis();
  const Exponent w0{0, 0};

  // Class in E = S_4 / span(f1, f2).
  auto coord_e = [&](const MultiPoly& s) {
    const auto c = ext.coordinates(s);
    std::vector<Rat> v;
    for (auto j : deg4) v.push_back(c[j].coeff(w0));
    return v;
  };

  std::vector<QBinaryForm> e_basis;
  for (auto j : deg4) e_basis.push_back(to_binary(ext.basis()[j], 4));
  std::vector<std::vector<Rat>> dual_e;
  for (auto i : deg2) dual_e.push_back(coord_e(dual[i]));

  // K: image of u in S_2 under sum_i [u b_i] (x) [b_i^*].
  std::vector<QMatrix> rel;
  bool symmetric = true;
  std::vector<std::vector<Rat>> rel_rows;
  for (const auto& mono : monomials_of_degree(2, 2)) {
    const MultiPoly u = MultiPoly::monomial(uv_vars(), mono);
    QMatrix t(3, 3, Rat(0));
    for (std::size_t k = 0; k < deg2.size(); ++k) {
      const auto left = coord_e(u * ext.basis()[deg2[k]]);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) t(a, b) += left[a] * dual_e[k][b];
    }
    symmetric = symmetric && t.is_symmetric();
    std::vector<Rat> row{t(0, 0), t(0, 1) + t(1, 0), t(0, 2) + t(2, 0), t(1, 1), t(1, 2) + t(2, 1), t(2, 2)};
    rel_rows.push_back(row);
    rel.push_back(std::move(t));
  }
  if (span_rank(rel_rows, 6) != 3) fail(ErrorCode::InternalInconsistency, "relation space is not 3-dimensional");
  if (!symmetric) fail(ErrorCode::InternalInconsistency, "relation space is not symmetric");

  // V^dual = symmetric forms B with sum_ab B_ab T_ab = 0 for T in K.
  const auto perp = kernel_basis(QMatrix::from_rows(rel_rows, 6), Rat(0));
  if (perp.size() != 3) fail(ErrorCode::InternalInconsistency, "net of conics is not 3-dimensional");
  const NetOfConics net({sym_from(perp[0]), sym_from(perp[1]), sym_from(perp[2])});

  // The source line maps to P(E) by [a:b] -> sum_i b_i(a,b) [b_i^*].
  QMatrix veronese(3, 3, Rat(0));
  for (int k = 0; k < 3; ++k) {
    const Exponent mono{2 - k, k};
    for (std::size_t i = 0; i < deg2.size(); ++i) {
      const Rat c = ext.basis()[deg2[i]].coeff(mono);
      if (sgn(c) == 0) continue;
      for (std::size_t a = 0; a < 3; ++a) veronese(a, static_cast<std::size_t>(k)) += c * dual_e[i][a];
    }
  }
  if (rank(veronese) != 3) fail(ErrorCode::InternalInconsistency, "source line does not embed as a conic");

  // xi: the net member vanishing on the embedded line.
  const auto z = quadrics_from_columns(veronese);
  QMatrix along(5, 3, Rat(0));
  for (std::size_t m = 0; m < 3; ++m) {
    const auto n = evaluate_on(net.gram(m), z);
    for (int i = 0; i <= 4; ++i) along(static_cast<std::size_t>(i), m) = n.coeff(i);
  }
  const auto xis = kernel_basis(along, Rat(0));
  if (xis.size() != 1) fail(ErrorCode::InternalInconsistency, "embedded line does not lie on a unique net member");

  PencilQuadruple out{AlgebraicQuadruple{net, normalize_point(xis[0])}, std::move(e_basis), std::move(rel), symmetric,
                      veronese};
  const auto v = validate_quadruple(out.quadruple);
  if (!v.basepoint_free) fail(ErrorCode::InternalInconsistency, "derived net has a basepoint");
  if (!v.off_discriminant) fail(ErrorCode::InternalInconsistency, "derived xi lies on the discriminant");
  return out;
}

const char* iso_status_name(IsoStatus s) {
  switch (s) {
    case IsoStatus::ExplicitIso: return "ExplicitIso";
    case IsoStatus::InvariantMatch: return "InvariantMatch";
    case IsoStatus::Mismatch: return "Mismatch";
  }
  return "?";
}

QuadrupleIsoReport roundtrip_check(const AlgebraicQuadruple& q, const ProjPoint& pt) {
  require_usable(q);
  QuadrupleIsoReport rep;
  rep.pencil = quadruple_to_pencil(q, pt);
  rep.rederived = pencil_to_quadruple(*rep.pencil);
  const auto& q2 = rep.rederived->quadruple;

  // L sends the embedded source line in E' onto the parametrized conic in E.
  const QMatrix zc = quadric_columns(parametrize_conic(xi_conic(q), pt));
  bool explicit_ok = false;
  if (auto vinv = inverse(rep.rederived->veronese)) {
    const QMatrix l = zc * *vinv;
    std::vector<std::vector<Rat>> cols;
    for (const auto& g : q2.net.grams()) cols.push_back(g.data());
    const QMatrix basis = QMatrix::from_rows(cols, 9).transpose();
    QMatrix tmap(3, 3, Rat(0));
    bool solved = true;
    for (std::size_t m = 0; m < 3 && solved; ++m) {
      const QMatrix pulled = l.transpose() * q.net.gram(m) * l;
      const auto sol = solve(basis, pulled.data(), Rat(0));
      if (!sol) {
        solved = false;
        break;
      }
      for (std::size_t n = 0; n < 3; ++n) tmap(m, n) = (*sol)[n];
    }
    if (solved && sgn(determinant(tmap)) != 0) {
      const QMatrix pulled_xi = l.transpose() * xi_conic(q) * l;
      const bool xi_ok = span_rank(std::vector<std::vector<Rat>>{pulled_xi.data(), xi_conic(q2).data()}, 9) == 1;
      if (xi_ok) {
        explicit_ok = true;
        rep.e_map = l;
        rep.v_map = tmap;
      } else {
        rep.diagnostics.push_back("pulled back xi-conic differs from the rederived one");
      }
    } else {
      rep.diagnostics.push_back("pulled back net differs from the rederived net");
    }
  } else {
    rep.diagnostics.push_back("rederived embedding is singular");
  }

  if (explicit_ok) {
    rep.status = IsoStatus::ExplicitIso;
  } else {
    const ProjPoint pt2 = rep.rederived->veronese.col(0);
    rep.invariants_original = invariants(q.net, *rep.pencil);
    rep.invariants_rederived = invariants(q2.net, quadruple_to_pencil(q2, pt2));
    rep.status = rep.invariants_original == rep.invariants_rederived ? IsoStatus::InvariantMatch : IsoStatus::Mismatch;
  }
  return rep;
}

AlgebraicQuadruple quadruple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("xi")) fail(ErrorCode::InvalidInput, "a quadruple needs a net and xi");
  const NetOfConics net = net_from_json(j.contains("net") ? j.at("net") : j);
  return AlgebraicQuadruple{net, vector_from_json(j.at("xi"), 3)};
}

Json quadruple_to_json(const AlgebraicQuadruple& q) {
  Json j;
  j["net"] = net_to_json(q.net);
  j["xi"] = vector_to_json(q.xi);
  return j;
}

}  // namespace cq
