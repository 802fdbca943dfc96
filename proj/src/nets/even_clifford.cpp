#include "cq/nets/even_clifford.hpp"

#include <map>

namespace cq {

namespace {

using Elem = std::map<std::vector<int>, Rat>;

void add_into(Elem& acc, const Elem& x, const Rat& c) {
  for (const auto& [w, v] : x) {
    Rat& slot = acc[w];
    slot += c * v;
    if (sgn(slot) == 0) acc.erase(w);
  }
}

// Normal form with strictly increasing indices, using
// e_j e_i = -e_i e_j + 2 B_ij and e_i e_i = B_ii.
Elem normal_form(const std::vector<int>& w, const QMatrix& b) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] < w[k + 1]) continue;
    std::vector<int> rest(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
    const auto i = static_cast<std::size_t>(w[k + 1]), j = static_cast<std::size_t>(w[k]);
    Elem out;
    if (i == j) {
      add_into(out, normal_form(rest, b), b(i, i));
      return out;
    }
    std::vector<int> swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    add_into(out, normal_form(swapped, b), Rat(-1));
    add_into(out, normal_form(rest, b), Rat(2) * b(i, j));
    return out;
  }
  return Elem{{w, Rat(1)}};
}

const std::vector<std::vector<int>>& even_basis() {
  static const std::vector<std::vector<int>> basis{{}, {0, 1}, {0, 2}, {1, 2}};
  return basis;
}

}  // namespace

EvenCliffordAlgebra even_clifford_of_form(const QMatrix& gram) {
  if (gram.rows() != 3 || gram.cols() != 3 || !gram.is_symmetric())
    fail(ErrorCode::InvalidInput, "quadratic form must be a symmetric 3x3 matrix");
  EvenCliffordAlgebra alg;
  const auto& basis = even_basis();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<int> w = basis[i];
      w.insert(w.end(), basis[j].begin(), basis[j].end());
      const Elem p = normal_form(w, gram);
      std::vector<Rat> coords(4, Rat(0));
      for (const auto& [word, c] : p) {
        std::size_t k = 0;
        while (k < 4 && basis[k] != word) ++k;
        if (k == 4) fail(ErrorCode::InternalInconsistency, "product left the even part");
        coords[k] = c;
      }
      alg.table[i][j] = coords;
    }
  // Center: x with x b_j = b_j x for all j.
  QMatrix comm(16, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t l = 0; l < 4; ++l) comm(4 * j + l, k) = alg.table[k][j][l] - alg.table[j][k][l];
  alg.center_dim = 4 - rank(comm);
  // Trace form of the regular representation.
  auto left_trace = [&](const std::vector<Rat>& x) {
    Rat tr = 0;
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t m = 0; m < 4; ++m) tr += x[k] * alg.table[k][m][m];
    return tr;
  };
  QMatrix tf(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) tf(i, j) = left_trace(alg.table[i][j]);
  alg.trace_form_rank = rank(tf);
  alg.is_azumaya = alg.center_dim == 1 && alg.trace_form_rank == 4;
  return alg;
}

EvenCliffordAlgebra even_clifford_at_point(const NetOfConics& net, const ProjPoint& p) {
  return even_clifford_of_form(net.member(p));
}

}  // namespace cq
