#pragma once

#include <utility>
#include <vector>

#include "cq/exactalg/unipoly.hpp"

namespace cq {

struct Factorization {
  Rat unit;                                       // leading coefficient of the input
  std::vector<std::pair<QPoly, int>> factors;     // monic irreducible factors with multiplicity
};

constexpr int kFactorDegreeBound = 12;

// Complete factorization over Q (squarefree split, modular factorization,
// Hensel lifting and recombination).
Factorization factor_rationals(const QPoly& p);

// Rational roots of p, each listed once.
std::vector<Rat> rational_roots(const QPoly& p);

}  // namespace cq
