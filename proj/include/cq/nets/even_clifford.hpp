#pragma once

#include <array>
#include <vector>

#include "cq/exactalg/matrix.hpp"
#include "cq/nets/net.hpp"

namespace cq {

// Even Clifford algebra of a ternary quadratic form with Gram matrix B,
// on the basis 1, e1e2, e1e3, e2e3 where e_i e_j + e_j e_i = 2 B_ij.
struct EvenCliffordAlgebra {
  // table[i][j] = coordinates of basis_i * basis_j
  std::array<std::array<std::vector<Rat>, 4>, 4> table;
  std::size_t center_dim = 0;
  std::size_t trace_form_rank = 0;
  bool is_azumaya = false;  // central simple: 1-dimensional center and semisimple
};

EvenCliffordAlgebra even_clifford_of_form(const QMatrix& gram);
EvenCliffordAlgebra even_clifford_at_point(const NetOfConics& net, const ProjPoint& p);

}  // namespace cq
