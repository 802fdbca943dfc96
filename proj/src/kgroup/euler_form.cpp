#include "cq/kgroup/euler_form.hpp"

namespace cq {

EulerForm::EulerForm(const Entries& g) : g_(g) {
  for (int i = 0; i < 4; ++i) {
    if ((*this)(i, i) != 1) fail(ErrorCode::InvalidInput, "Euler form needs unit diagonal");
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) fail(ErrorCode::InvalidInput, "Euler form must be upper triangular");
  }
}

EulerForm EulerForm::from_matrix(const QMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) fail(ErrorCode::InvalidInput, "Euler form must be 4x4");
  Entries g{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Rat& x = m(i, j);
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) fail(ErrorCode::InvalidInput, "Euler form entries must be integers");
      g[i][j] = x.get_num().get_si();
    }
  return EulerForm(g);
}

QMatrix EulerForm::to_matrix() const {
  QMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Rat(static_cast<long>(g_[i][j]));
  return m;
}

std::string EulerForm::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 4; ++j) s += (j ? "," : "") + std::to_string((*this)(i, j));
    s += "]";
  }
  return s + "]";
}

EulerForm type_A_matrix() { return EulerForm({{{1, 2, 2, 4}, {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}}}); }

EulerForm type_Bm_matrix(long long m) {
  if (m < 0) fail(ErrorCode::InvalidInput, "m must be nonnegative");
  return EulerForm({{{1, m, 2 * m, m}, {0, 1, 3, 3}, {0, 0, 1, 3}, {0, 0, 0, 1}}});
}

EulerForm bundle_gram() { return EulerForm({{{1, 2, 4, 5}, {0, 1, 0, 1}, {0, 0, 1, 2}, {0, 0, 0, 1}}}); }

EulerForm blowup_gram() { return EulerForm({{{1, 3, 6, 2}, {0, 1, 3, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}}}); }

QMatrix serre_automorphism(const EulerForm& e) {
  const QMatrix g = e.to_matrix();
  const auto inv = inverse(g);
  if (!inv) fail(ErrorCode::InternalInconsistency, "unitriangular matrix not invertible");
  return *inv * g.transpose();
}

QPoly characteristic_polynomial(const QMatrix& m) {
  const std::size_t n = m.rows();
  const QMatrix id = QMatrix::identity(n, Rat(0));
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id.scaled(c[n - k + 1]);
    Rat tr = 0;
    const QMatrix amk = m * mk;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return QPoly(c, Rat(0));
}

SurfaceAxiomReport check_surface_axioms(const EulerForm& e) {
  SurfaceAxiomReport r;
  const QMatrix g = e.to_matrix();
  const QMatrix s = serre_automorphism(e);
  r.serre_identity = g * s == g.transpose();
  const QMatrix n = s - QMatrix::identity(4, Rat(0));
  r.unipotent = (n * n * n * n).is_zero_matrix();
  r.rank_s_minus_id = rank(n);
  r.characteristic_polynomial = characteristic_polynomial(s);
  return r;
}

EulerForm euler_form_from_json(const Json& j) {
  return EulerForm::from_matrix(matrix_from_json(j.is_object() && j.contains("gram") ? j.at("gram") : j, 4, 4));
}

Json euler_form_to_json(const EulerForm& e) {
  Json j;
  j["gram"] = e.entries();
  return j;
}

}  // namespace cq
