#include "cq/graded/quotient_algebra.hpp"

namespace cq {

GradedQuotient::GradedQuotient(std::vector<int> generator_degrees, std::vector<NCRelation> relations,
                               int max_degree)
    : gen_deg_(std::move(generator_degrees)), rels_(std::move(relations)), max_degree_(max_degree) {
  for (int g : gen_deg_)
    if (g <= 0) fail(ErrorCode::InvalidInput, "generator degrees must be positive");
  for (const auto& r : rels_) {
    if (r.terms.empty()) fail(ErrorCode::InvalidInput, "empty relation");
    const int d = word_degree(r.terms.front().second);
    for (const auto& [c, w] : r.terms)
      if (word_degree(w) != d) fail(ErrorCode::InvalidInput, "inhomogeneous relation");
    rel_deg_.push_back(d);
  }
  pieces_.resize(static_cast<std::size_t>(max_degree_) + 1);
  pieces_[0].dim = 1;
  for (int d = 1; d <= max_degree_; ++d) {
    Piece& p = pieces_[static_cast<std::size_t>(d)];
    p.block_offset.resize(gen_deg_.size());
    for (std::size_t g = 0; g < gen_deg_.size(); ++g) {
      p.block_offset[g] = p.u_dim;
      const int e = d - gen_deg_[g];
      if (e >= 0) p.u_dim += pieces_[static_cast<std::size_t>(e)].dim;
    }
    std::vector<std::vector<Rat>> rows;
    for (std::size_t r = 0; r < rels_.size(); ++r) {
      const int e = d - rel_deg_[r];
      if (e < 0) continue;
      const std::size_t he = pieces_[static_cast<std::size_t>(e)].dim;
      for (std::size_t k = 0; k < he; ++k) {
        std::vector<Rat> h(he, Rat(0));
        h[k] = 1;
        std::vector<Rat> acc(p.u_dim, Rat(0));
        for (const auto& [c, w] : rels_[r].terms) {
          const auto v = multiply_into_u(d, h, e, w);
          for (std::size_t i = 0; i < acc.size(); ++i)
            if (sgn(v[i]) != 0) acc[i] += c * v[i];
        }
        rows.push_back(std::move(acc));
      }
    }
    p.image = rows.empty() ? RrefResult<Rat>{QMatrix(0, p.u_dim), 0, {}} : rref(QMatrix::from_rows(rows, p.u_dim));
    std::vector<bool> pivot(p.u_dim, false);
    for (auto c : p.image.pivots) pivot[c] = true;
    for (std::size_t c = 0; c < p.u_dim; ++c)
      if (!pivot[c]) p.free_coords.push_back(c);
    p.dim = p.free_coords.size();
    for (std::size_t g = 0; g < gen_deg_.size(); ++g) {
      const int e = d - gen_deg_[g];
      if (e < 0) {
        p.mult.emplace_back(0, 0);
        continue;
      }
      const std::size_t he = pieces_[static_cast<std::size_t>(e)].dim;
      QMatrix m(p.dim, he);
      for (std::size_t k = 0; k < he; ++k) {
        std::vector<Rat> u(p.u_dim, Rat(0));
        u[p.block_offset[g] + k] = 1;
        const auto h = project(d, std::move(u));
        for (std::size_t i = 0; i < p.dim; ++i) m(i, k) = h[i];
      }
      p.mult.push_back(std::move(m));
    }
  }
}

int GradedQuotient::word_degree(const Word& w) const {
  int d = 0;
  for (int g : w) {
    if (g < 0 || static_cast<std::size_t>(g) >= gen_deg_.size()) fail(ErrorCode::InvalidInput, "unknown generator");
    d += gen_deg_[static_cast<std::size_t>(g)];
  }
  return d;
}

std::vector<Rat> GradedQuotient::project(int d, std::vector<Rat> u) const {
  const Piece& p = pieces_[static_cast<std::size_t>(d)];
  const auto& red = p.image.reduced;
  for (std::size_t i = 0; i < p.image.rank; ++i) {
    const std::size_t c = p.image.pivots[i];
    if (sgn(u[c]) == 0) continue;
    const Rat f = u[c];
    for (std::size_t j = c; j < p.u_dim; ++j)
      if (sgn(red(i, j)) != 0) u[j] -= f * red(i, j);
  }
  std::vector<Rat> h;
  h.reserve(p.dim);
  for (auto c : p.free_coords) h.push_back(u[c]);
  return h;
}

std::vector<Rat> GradedQuotient::multiply_into_u(int d, const std::vector<Rat>& h, int h_degree,
                                                 const Word& w) const {
  std::vector<Rat> cur = h;
  int deg = h_degree;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const int g = w[k];
    deg += gen_deg_[static_cast<std::size_t>(g)];
    cur = pieces_[static_cast<std::size_t>(deg)].mult[static_cast<std::size_t>(g)].apply(cur);
  }
  const Piece& p = pieces_[static_cast<std::size_t>(d)];
  std::vector<Rat> u(p.u_dim, Rat(0));
  const int last = w.back();
  for (std::size_t i = 0; i < cur.size(); ++i) u[p.block_offset[static_cast<std::size_t>(last)] + i] = cur[i];
  return u;
}

std::size_t GradedQuotient::dim(int d) const {
  if (d < 0) return 0;
  if (d > max_degree_) fail(ErrorCode::DegreeBoundExceeded, "degree beyond the computed range");
  return pieces_[static_cast<std::size_t>(d)].dim;
}

std::vector<std::size_t> GradedQuotient::hilbert() const {
  std::vector<std::size_t> out;
  for (const auto& p : pieces_) out.push_back(p.dim);
  return out;
}

std::vector<Rat> GradedQuotient::reduce_word(const Word& w) const {
  const int d = word_degree(w);
  if (d > max_degree_) fail(ErrorCode::DegreeBoundExceeded, "word degree beyond the computed range");
  std::vector<Rat> cur{Rat(1)};
  int deg = 0;
  for (int g : w) {
    deg += gen_deg_[static_cast<std::size_t>(g)];
    cur = pieces_[static_cast<std::size_t>(deg)].mult[static_cast<std::size_t>(g)].apply(cur);
  }
  return cur;
}

std::vector<Rat> GradedQuotient::reduce_relation(const NCRelation& r) const {
  const int d = word_degree(r.terms.front().second);
  std::vector<Rat> acc(dim(d), Rat(0));
  for (const auto& [c, w] : r.terms) {
    const auto v = reduce_word(w);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
  }
  return acc;
}

const QMatrix& GradedQuotient::right_multiplication(int d, int g) const {
  const int t = d + generator_degree(g);
  if (t > max_degree_) fail(ErrorCode::DegreeBoundExceeded, "product beyond the computed range");
  return pieces_[static_cast<std::size_t>(t)].mult[static_cast<std::size_t>(g)];
}

std::vector<std::size_t> subalgebra_span_dims(const GradedQuotient& h, const std::vector<int>& generators) {
  std::vector<std::vector<std::vector<Rat>>> span(static_cast<std::size_t>(h.max_degree()) + 1);
  span[0] = {{Rat(1)}};
  std::vector<std::size_t> dims{1};
  for (int d = 1; d <= h.max_degree(); ++d) {
    std::vector<std::vector<Rat>> vecs;
    for (int g : generators) {
      const int e = d - h.generator_degree(g);
      if (e < 0) continue;
      const auto& m = h.right_multiplication(e, g);
      for (const auto& v : span[static_cast<std::size_t>(e)]) vecs.push_back(m.apply(v));
    }
    span[static_cast<std::size_t>(d)] = vecs.empty() ? vecs : row_space_basis(vecs, h.dim(d), Rat(0));
    dims.push_back(span[static_cast<std::size_t>(d)].size());
  }
  return dims;
}

}  // namespace cq
