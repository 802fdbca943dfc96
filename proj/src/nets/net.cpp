#include "cq/nets/net.hpp"

#include "cq/graded/free_extension.hpp"

namespace cq {

const std::vector<std::string>& xyz_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

const std::vector<std::string>& y_vars() {
  static const std::vector<std::string> v{"y1", "y2", "y3"};
  return v;
}

NetOfConics::NetOfConics(std::array<QMatrix, 3> grams) : m_(std::move(grams)) {
  std::vector<std::vector<Rat>> flat;
  for (const auto& g : m_) {
    if (g.rows() != 3 || g.cols() != 3 || !g.is_symmetric())
      fail(ErrorCode::InvalidInput, "net members must be symmetric 3x3 matrices");
    flat.push_back(g.data());
  }
  if (span_rank(flat, 9) != 3) fail(ErrorCode::InvalidInput, "net members are linearly dependent");
}

NetOfConics NetOfConics::from_quadrics(const std::array<MultiPoly, 3>& q) {
  return NetOfConics({gram_of_quadratic(q[0]), gram_of_quadratic(q[1]), gram_of_quadratic(q[2])});
}

QMatrix NetOfConics::member(const std::vector<Rat>& y) const {
  if (y.size() != 3) fail(ErrorCode::InvalidInput, "net coordinates have length 3");
  return m_[0].scaled(y[0]) + m_[1].scaled(y[1]) + m_[2].scaled(y[2]);
}

std::array<MultiPoly, 3> NetOfConics::quadrics() const {
  return {quadratic_form(xyz_vars(), m_[0]), quadratic_form(xyz_vars(), m_[1]), quadratic_form(xyz_vars(), m_[2])};
}

MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

std::array<std::array<MultiPoly, 3>, 3> symbolic_member(const NetOfConics& net) {
  std::array<std::array<MultiPoly, 3>, 3> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      MultiPoly e(y_vars());
      for (std::size_t k = 0; k < 3; ++k) e = e + MultiPoly::variable(y_vars(), k).scaled(net.gram(k)(i, j));
      m[i][j] = e;
    }
  return m;
}

std::vector<MultiPoly> two_by_two_minors(const NetOfConics& net) {
  const auto m = symbolic_member(net);
  std::vector<MultiPoly> out;
  for (std::size_t r1 = 0; r1 < 3; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < 3; ++r2)
      for (std::size_t c1 = 0; c1 < 3; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 3; ++c2) {
          MultiPoly d = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
          if (!d.is_zero()) out.push_back(d);
        }
  return out;
}

}  // namespace

PlaneCubic discriminant_cubic(const NetOfConics& net) {
  MultiPoly d = det3(symbolic_member(net));
  if (d.is_zero()) fail(ErrorCode::IdenticallyZero, "every member of the net is singular");
  return PlaneCubic(d);
}

std::vector<std::size_t> net_quotient_hilbert(const NetOfConics& net, int max_degree) {
  const auto q = net.quadrics();
  return quotient_hilbert_function({q[0], q[1], q[2]}, max_degree);
}

bool is_basepoint_free(const NetOfConics& net) {
  return net_quotient_hilbert(net, 4) == std::vector<std::size_t>{1, 3, 3, 1, 0};
}

int double_line_count(const NetOfConics& net) {
  if (!is_basepoint_free(net)) fail(ErrorCode::NotBasepointFree, "double lines are counted for basepoint-free nets");
  const auto minors = two_by_two_minors(net);
  if (minors.empty()) fail(ErrorCode::InternalInconsistency, "rank-one locus is everything");
  return stable_hilbert_value(minors);
}

std::vector<ProjPoint> rational_double_lines(const NetOfConics& net) {
  const auto minors = two_by_two_minors(net);
  if (minors.size() < 2) return {};
  return rational_common_zeros(minors);
}

const char* net_type_name(NetType t) {
  switch (t) {
    case NetType::A: return "A";
    case NetType::B: return "B";
    case NetType::D: return "D";
    case NetType::E: return "E";
    case NetType::HasBasepoint: return "HasBasepoint";
    case NetType::Unrecognized: return "Unrecognized";
  }
  return "?";
}

NetClassification classify_net(const NetOfConics& net) {
  NetClassification c;
  c.basepoint_free = is_basepoint_free(net);
  if (!c.basepoint_free) {
    c.type = NetType::HasBasepoint;
    return c;
  }
  c.double_lines = double_line_count(net);
  const PlaneCubic disc = discriminant_cubic(net);
  c.jacobian_degree = jacobian_degree(disc);
  if (c.double_lines < 0 || c.double_lines > 3) {
    c.diagnostics.push_back("double-line scheme of unexpected degree " + std::to_string(c.double_lines));
    return c;
  }
  if (c.jacobian_degree != c.double_lines) {
    c.diagnostics.push_back("Jacobian degree " + std::to_string(c.jacobian_degree) + " differs from double-line count");
    return c;
  }
  std::vector<ProjPoint> sing;
  if (c.jacobian_degree > 0) {
    try {
      sing = rational_singular_points(disc);
    } catch (const Error& e) {
      c.diagnostics.push_back(std::string("singular point search failed: ") + e.what());
    }
  }
  c.rational_singular_points = static_cast<int>(sing.size());
  const NetType by_count[] = {NetType::A, NetType::B, NetType::D, NetType::E};
  const NetType expected = by_count[c.double_lines];
  if (c.double_lines >= 2) {
    if (static_cast<int>(sing.size()) < c.double_lines) {
      c.low_confidence = true;
      c.diagnostics.push_back("singular points not all rational; type decided by the double-line count");
    } else {
      for (std::size_t i = 0; i < sing.size(); ++i)
        for (std::size_t j = i + 1; j < sing.size(); ++j)
          if (line_in_curve(disc.poly(), sing[i], sing[j])) ++c.line_components_found;
      const int want = c.double_lines == 2 ? 1 : 3;
      if (c.line_components_found != want) {
        c.diagnostics.push_back("line components through the singular points: " +
                                std::to_string(c.line_components_found));
        return c;
      }
    }
  }
  c.type = expected;
  return c;
}

ProjPoint g_evaluate(const NetOfConics& net, const ProjPoint& z) {
  if (z.size() != 3) fail(ErrorCode::InvalidInput, "points of P^2 have three coordinates");
  ProjPoint out;
  for (const auto& g : net.grams()) {
    const auto gz = g.apply(z);
    Rat v = 0;
    for (std::size_t i = 0; i < 3; ++i) v += z[i] * gz[i];
    out.push_back(v);
  }
  if (sgn(out[0]) == 0 && sgn(out[1]) == 0 && sgn(out[2]) == 0)
    fail(ErrorCode::NotBasepointFree, "the point is a basepoint of the net");
  return normalize_point(out);
}

NetOfConics net_from_json(const Json& j) {
  if (j.is_object() && j.contains("quadrics")) {
    const Json& q = j.at("quadrics");
    if (!q.is_array() || q.size() != 3) fail(ErrorCode::InvalidInput, "a net needs three quadrics");
    return NetOfConics::from_quadrics({multipoly_from_json(q[0]), multipoly_from_json(q[1]), multipoly_from_json(q[2])});
  }
  const Json& g = j.is_object() && j.contains("grams") ? j.at("grams") : j;
  if (!g.is_array() || g.size() != 3) fail(ErrorCode::InvalidInput, "a net needs three Gram matrices");
  return NetOfConics({matrix_from_json(g[0], 3, 3), matrix_from_json(g[1], 3, 3), matrix_from_json(g[2], 3, 3)});
}

Json net_to_json(const NetOfConics& net) {
  Json j;
  j["grams"] = Json::array();
  for (const auto& g : net.grams()) j["grams"].push_back(matrix_to_json(g));
  return j;
}

}  // namespace cq
