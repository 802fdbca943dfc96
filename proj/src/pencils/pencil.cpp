#include "cq/pencils/pencil.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cq/exactalg/factor.hpp"
#include "cq/exactalg/numberfield.hpp"

namespace cq {

namespace {

QBinaryForm fibre(const BinaryQuarticPencil& p, const Rat& a, const Rat& b) {
  return p.f1().scaled(b) - p.f2().scaled(a);
}

}  // namespace

BinaryQuarticPencil::BinaryQuarticPencil(QBinaryForm f1, QBinaryForm f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
  if (f1_.degree() != 4 || f2_.degree() != 4) fail(ErrorCode::InvalidInput, "pencil members must be quartics");
  std::vector<std::vector<Rat>> rows{f1_.coeffs(), f2_.coeffs()};
  if (span_rank(rows, 5) != 2) fail(ErrorCode::InvalidInput, "pencil members must be independent");
}

BinaryQuarticPencil BinaryQuarticPencil::reparametrize(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
  if (a * d - b * c == 0) fail(ErrorCode::InvalidInput, "singular coordinate change");
  return BinaryQuarticPencil(f1_.substitute(a, b, c, d), f2_.substitute(a, b, c, d));
}

BinaryQuarticPencil BinaryQuarticPencil::retarget(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
  if (a * d - b * c == 0) fail(ErrorCode::InvalidInput, "singular coordinate change");
  return BinaryQuarticPencil(f1_.scaled(a) + f2_.scaled(b), f1_.scaled(c) + f2_.scaled(d));
}

bool is_basepoint_free(const BinaryQuarticPencil& p) { return binary_resultant(p.f1(), p.f2()) != 0; }

QBinaryForm discriminant_sextic(const BinaryQuarticPencil& p) {
  if (!is_basepoint_free(p)) fail(ErrorCode::NotBasepointFree, "the quartics share a root");
  QMatrix v(7, 7);
  std::vector<Rat> rhs;
  for (int k = 0; k < 7; ++k) {
    Rat pw = 1;
    for (int i = 0; i < 7; ++i) {
      v(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = pw;
      pw *= k;
    }
    rhs.push_back(binary_discriminant(fibre(p, Rat(k), Rat(1))));
  }
  auto c = solve(v, rhs, Rat(0));
  if (!c) fail(ErrorCode::InternalInconsistency, "discriminant interpolation failed");
  QBinaryForm d(6, *c);
  if (d.is_zero()) fail(ErrorCode::InternalInconsistency, "discriminant of a basepoint-free pencil vanishes");
  return d;
}

Symbol symbol(const BinaryQuarticPencil& p) {
  const QBinaryForm d = discriminant_sextic(p);
  Symbol s;
  auto add = [&s](BranchPoint bp) {
    for (int k = 0; k < bp.conjugates; ++k) s.partitions.push_back(bp.partition);
    s.riemann_hurwitz += bp.conjugates * (4 - static_cast<int>(bp.partition.size()));
    if (bp.discriminant_multiplicity != 4 - static_cast<int>(bp.partition.size()))
      fail(ErrorCode::InternalInconsistency, "branch point multiplicity disagrees with its fibre");
    s.points.push_back(std::move(bp));
  };

  if (const int inf = d.multiplicity_at_infinity(); inf > 0) {
    BranchPoint bp;
    bp.at_infinity = true;
    bp.partition = root_multiplicity_partition(p.f2());
    bp.discriminant_multiplicity = inf;
    add(std::move(bp));
  }
  const Factorization fac = factor_rationals(d.dehomogenize());
  for (const auto& [h, m] : fac.factors) {
    BranchPoint bp;
    bp.factor = h.monic();
    bp.conjugates = h.degree();
    bp.discriminant_multiplicity = m;
    if (h.degree() == 1) {
      const Rat a = -bp.factor.coeff(0);
      bp.partition = root_multiplicity_partition(fibre(p, a, Rat(1)));
    } else {
      const auto field = NumberField::make(bp.factor);
      const NFElem theta = NFElem::generator(field);
      std::vector<NFElem> c;
      for (int i = 0; i <= 4; ++i) c.push_back(NFElem(field, p.f1().coeff(i)) - theta * NFElem(field, p.f2().coeff(i)));
      bp.partition = root_multiplicity_partition(BinaryForm<NFElem>(4, c));
    }
    add(std::move(bp));
  }
  s.partitions = canonical_symbol(std::move(s.partitions));
  if (s.riemann_hurwitz != 6) fail(ErrorCode::InternalInconsistency, "Riemann-Hurwitz count is not 6");
  return s;
}

std::vector<Partition> canonical_symbol(std::vector<Partition> s) {
  for (auto& part : s) std::sort(part.begin(), part.end(), std::greater<int>());
  std::sort(s.begin(), s.end(), std::greater<Partition>());
  return s;
}

std::string symbol_to_string(const std::vector<Partition>& s) {
  std::ostringstream out;
  out << "[";
  for (const auto& part : s) {
    out << "(";
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? "," : "") << part[i];
    out << ")";
  }
  out << "]";
  return out.str();
}

std::vector<Partition> parse_symbol(const std::string& s) {
  std::vector<Partition> out;
  Partition cur;
  bool open = false;
  int num = -1;
  for (char ch : s) {
    if (ch == '(') {
      if (open) fail(ErrorCode::InvalidInput, "nested parenthesis in symbol");
      open = true;
      cur.clear();
      num = -1;
    } else if (ch >= '0' && ch <= '9') {
      if (!open) fail(ErrorCode::InvalidInput, "digit outside a partition");
      num = (num < 0 ? 0 : num * 10) + (ch - '0');
    } else if (ch == ',' || ch == ')') {
      if (!open || num < 0) fail(ErrorCode::InvalidInput, "malformed partition");
      cur.push_back(num);
      num = -1;
      if (ch == ')') {
        out.push_back(cur);
        open = false;
      }
    } else if (ch != '[' && ch != ']' && ch != ' ') {
      fail(ErrorCode::InvalidInput, "unexpected character in symbol");
    }
  }
  if (open) fail(ErrorCode::InvalidInput, "unterminated partition");
  return canonical_symbol(out);
}

const std::vector<PencilTypeInfo>& pencil_types() {
  static const std::vector<PencilTypeInfo> table = [] {
    std::vector<PencilTypeInfo> t{
        {'A', parse_symbol("[(4)(4)]"), "conic and line", 0},
        {'B', parse_symbol("[(4)(2,2)(2,1,1)]"), "conic and line", 0},
        {'C', parse_symbol("[(4)(3,1)(2,1,1)]"), "nodal cubic", 0},
        {'D', parse_symbol("[(4)(2,1,1)(2,1,1)(2,1,1)]"), "nodal cubic", 1},
        {'E', parse_symbol("[(2,2)(2,2)(2,2)]"), "triangle of lines", 0},
        {'F', parse_symbol("[(2,2)(2,2)(2,1,1)(2,1,1)]"), "conic and line", 1},
        {'G', parse_symbol("[(2,2)(3,1)(3,1)]"), "nodal cubic", 0},
        {'H', parse_symbol("[(2,2)(3,1)(2,1,1)(2,1,1)]"), "nodal cubic", 1},
        {'I', parse_symbol("[(3,1)(3,1)(3,1)]"), "elliptic curve, j=0", 0},
        {'J', parse_symbol("[(3,1)(3,1)(2,1,1)(2,1,1)]"), "elliptic curve", 1},
        {'K', parse_symbol("[(2,2)(2,1,1)(2,1,1)(2,1,1)(2,1,1)]"), "nodal cubic", 2},
        {'L', parse_symbol("[(3,1)(2,1,1)(2,1,1)(2,1,1)(2,1,1)]"), "elliptic curve", 2},
        {'M', parse_symbol("[(2,1,1)(2,1,1)(2,1,1)(2,1,1)(2,1,1)(2,1,1)]"), "elliptic curve", 3},
    };
    return t;
  }();
  return table;
}

const PencilTypeInfo& pencil_type_for_symbol(const std::vector<Partition>& s) {
  const auto c = canonical_symbol(s);
  if (c == parse_symbol("[(2,2)(2,2)(3,1)]"))
    fail(ErrorCode::InternalInconsistency, "symbol [(2,2)(2,2)(3,1)] does not occur for pencils of quartics");
  for (const auto& t : pencil_types())
    if (t.symbol == c) return t;
  fail(ErrorCode::InternalInconsistency, "symbol " + symbol_to_string(c) + " is not in the classification");
}

const PencilTypeInfo& classify_pencil(const BinaryQuarticPencil& p) { return pencil_type_for_symbol(symbol(p).partitions); }

BinaryQuarticPencil pencil_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("f1") || !j.contains("f2"))
    fail(ErrorCode::InvalidInput, "pencil needs f1 and f2 coefficient lists");
  return BinaryQuarticPencil(QBinaryForm(4, vector_from_json(j.at("f1"), 5)), QBinaryForm(4, vector_from_json(j.at("f2"), 5)));
}

Json pencil_to_json(const BinaryQuarticPencil& p) {
  Json j;
  j["f1"] = vector_to_json(p.f1().coeffs());
  j["f2"] = vector_to_json(p.f2().coeffs());
  return j;
}

Json symbol_to_json(const std::vector<Partition>& s) {
  Json j = Json::array();
  for (const auto& part : s) j.push_back(part);
  return j;
}

}  // namespace cq
