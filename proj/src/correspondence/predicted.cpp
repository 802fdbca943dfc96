#include "cq/correspondence/predicted.hpp"

#include "cq/exactalg/factor.hpp"
#include "cq/exactalg/numberfield.hpp"

namespace cq {

namespace {

std::vector<Rat> direction(const std::vector<Rat>& p, const std::vector<Rat>& q, const Rat& a) {
  std::vector<Rat> d;
  for (std::size_t i = 0; i < 3; ++i) d.push_back(a * p[i] + q[i]);
  return d;
}

void finish_line(SpecialLine& line, int multiplicity) {
  line.partition = partition_for_segre(line.segre);
  if (line.partition.size() == 4) fail(ErrorCode::InternalInconsistency, "special line gives an unramified fibre");
  if (4 - static_cast<int>(line.partition.size()) != multiplicity)
    fail(ErrorCode::InternalInconsistency, "tangency order disagrees with the pencil of conics");
}

}  // namespace

Partition partition_for_segre(SegreType t) {
  switch (t) {
    case SegreType::S111: return {1, 1, 1, 1};
    case SegreType::S21: return {2, 1, 1};
    case SegreType::S3: return {3, 1};
    case SegreType::S11_1: return {2, 2};
    case SegreType::S21_paren: return {4};
  }
  fail(ErrorCode::InternalInconsistency, "unknown Segre type");
}

PredictedSymbol predicted_symbol(const AlgebraicQuadruple& q) {
  const auto v = validate_quadruple(q);
  if (!v.valid()) fail(ErrorCode::InvalidInput, "not a valid quadruple");
  if (!v.off_discriminant) fail(ErrorCode::OnDiscriminant, "xi lies on the discriminant cubic");
  const QMatrix a = xi_conic(q);
  const PlaneCubic cubic = discriminant_cubic(q.net);

  // Lines through xi are xi + (a P + Q) for a frame (xi, P, Q).
  std::vector<std::vector<Rat>> frame;
  for (std::size_t i = 0; i < 3 && frame.size() < 2; ++i) {
    std::vector<Rat> e(3, Rat(0));
    e[i] = 1;
    auto trial = frame;
    trial.push_back(e);
    trial.push_back(q.xi);
    if (span_rank(trial, 3) == trial.size()) frame.push_back(e);
  }
  const auto& p = frame.at(0);
  const auto& qv = frame.at(1);

  // D(a): discriminant of the cubic restricted to the line, degree 6 in a.
  QMatrix vand(7, 7, Rat(0));
  std::vector<Rat> rhs;
  for (int k = 0; k < 7; ++k) {
    Rat pw = 1;
    for (int i = 0; i < 7; ++i) {
      vand(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = pw;
      pw *= k;
    }
    const QBinaryForm r(3, restrict_to_line(cubic.poly(), q.xi, direction(p, qv, Rat(k))));
    rhs.push_back(binary_discriminant(r));
  }
  const auto coeffs = solve(vand, rhs, Rat(0));
  if (!coeffs) fail(ErrorCode::InternalInconsistency, "tangency interpolation failed");
  const QBinaryForm disc(6, *coeffs);
  if (disc.is_zero()) fail(ErrorCode::InternalInconsistency, "every line through xi is tangent to the discriminant");

  PredictedSymbol out;
  if (const int inf = disc.multiplicity_at_infinity(); inf > 0) {
    SpecialLine line;
    line.at_infinity = true;
    line.segre = segre_symbol(a, q.net.member(p));
    line.cubic_profile = line_intersection_profile(cubic, q.xi, p).partition;
    finish_line(line, inf);
    out.lines.push_back(std::move(line));
  }
  for (const auto& [h, m] : factor_rationals(disc.dehomogenize()).factors) {
    SpecialLine line;
    line.factor = h.monic();
    line.conjugates = h.degree();
    if (h.degree() == 1) {
      const auto d = direction(p, qv, -line.factor.coeff(0));
      line.segre = segre_symbol(a, q.net.member(d));
      line.cubic_profile = line_intersection_profile(cubic, q.xi, d).partition;
    } else {
      try {
        const auto field = NumberField::make_trusted(line.factor);
        const NFElem theta = NFElem::generator(field);
        const QMatrix bp = q.net.member(p), bq = q.net.member(qv);
        Matrix<NFElem> an(3, 3, NFElem(field, Rat(0))), bn(3, 3, NFElem(field, Rat(0)));
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) {
            an(i, j) = NFElem(field, a(i, j));
            bn(i, j) = theta * NFElem(field, bp(i, j)) + NFElem(field, bq(i, j));
          }
        line.segre = segre_symbol_over(an, bn);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InternalInconsistency && e.code() != ErrorCode::NonInvertibleElement) throw;
        fail(ErrorCode::IrrationalSpecialLine, std::string("special line over Q[t]/(") + to_string(line.factor, "t") +
                                                   ") could not be classified: " + e.what());
      }
    }
    finish_line(line, m);
    out.lines.push_back(std::move(line));
  }
  for (const auto& line : out.lines)
    for (int k = 0; k < line.conjugates; ++k) out.partitions.push_back(line.partition);
  out.partitions = canonical_symbol(std::move(out.partitions));
  return out;
}

}  // namespace cq
