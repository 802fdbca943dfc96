#pragma once

#include <array>
#include <string>
#include <vector>

#include "cq/exactalg/json_io.hpp"
#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/multipoly.hpp"
#include "cq/nets/cubic.hpp"

namespace cq {

// Three symmetric Gram matrices B_m with q_m(v) = v^T B_m v, spanning a
// 3-dimensional space of ternary quadratic forms.
class NetOfConics {
 public:
  explicit NetOfConics(std::array<QMatrix, 3> grams);
  static NetOfConics from_quadrics(const std::array<MultiPoly, 3>& q);

  const QMatrix& gram(std::size_t m) const { return m_.at(m); }
  const std::array<QMatrix, 3>& grams() const { return m_; }
  // sum_m y_m B_m
  QMatrix member(const std::vector<Rat>& y) const;
  std::array<MultiPoly, 3> quadrics() const;

 private:
  std::array<QMatrix, 3> m_;
};

const std::vector<std::string>& xyz_vars();
const std::vector<std::string>& y_vars();

// det(y1 B1 + y2 B2 + y3 B3)
PlaneCubic discriminant_cubic(const NetOfConics& net);

// Determinant of a 3x3 matrix of polynomials.
MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m);

bool is_basepoint_free(const NetOfConics& net);
std::vector<std::size_t> net_quotient_hilbert(const NetOfConics& net, int max_degree);

int double_line_count(const NetOfConics& net);
std::vector<ProjPoint> rational_double_lines(const NetOfConics& net);

enum class NetType { A, B, D, E, HasBasepoint, Unrecognized };
const char* net_type_name(NetType t);

struct NetClassification {
  NetType type = NetType::Unrecognized;
  bool basepoint_free = false;
  int double_lines = -1;
  int jacobian_degree = -1;
  int rational_singular_points = -1;
  int line_components_found = 0;
  bool low_confidence = false;
  std::vector<std::string> diagnostics;
};

NetClassification classify_net(const NetOfConics& net);

// [q_1(z) : q_2(z) : q_3(z)]
ProjPoint g_evaluate(const NetOfConics& net, const ProjPoint& z);

// {"grams": [B1, B2, B3]} with row-major 3x3 matrices; {"quadrics": [...]}
// with polynomials in x, y, z is also accepted on input.
NetOfConics net_from_json(const Json& j);
Json net_to_json(const NetOfConics& net);

}  // namespace cq
