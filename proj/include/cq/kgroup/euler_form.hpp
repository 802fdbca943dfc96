#pragma once

#include <array>
#include <string>
#include <vector>

#include "cq/exactalg/json_io.hpp"
#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/unipoly.hpp"

namespace cq {

// Gram matrix of a rank-4 exceptional basis: upper unitriangular over Z.
class EulerForm {
 public:
  using Entries = std::array<std::array<long long, 4>, 4>;

  explicit EulerForm(const Entries& g);
  static EulerForm from_matrix(const QMatrix& m);

  long long operator()(int i, int j) const { return g_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Entries& entries() const { return g_; }
  QMatrix to_matrix() const;
  bool operator==(const EulerForm& o) const { return g_ == o.g_; }
  bool operator<(const EulerForm& o) const { return g_ < o.g_; }
  std::string to_string() const;

 private:
  Entries g_;
};

EulerForm type_A_matrix();
EulerForm type_Bm_matrix(long long m);
EulerForm bundle_gram();
EulerForm blowup_gram();

// s with G s = G^T.
QMatrix serre_automorphism(const EulerForm& e);

struct SurfaceAxiomReport {
  bool serre_identity = false;   // G s = G^T
  bool unipotent = false;        // (s - I)^4 = 0
  std::size_t rank_s_minus_id = 0;
  QPoly characteristic_polynomial;
  bool passes() const { return serre_identity && unipotent && rank_s_minus_id == 2; }
};

SurfaceAxiomReport check_surface_axioms(const EulerForm& e);

// {"gram": 4x4 integer rows}, or the bare array of rows.
EulerForm euler_form_from_json(const Json& j);
Json euler_form_to_json(const EulerForm& e);

// det(t I - m) by Faddeev-LeVerrier.
QPoly characteristic_polynomial(const QMatrix& m);

}  // namespace cq
