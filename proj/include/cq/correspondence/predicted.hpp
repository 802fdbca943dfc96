#pragma once

#include <vector>

#include "cq/correspondence/quadruple.hpp"
#include "cq/nets/segre.hpp"

namespace cq {

struct SpecialLine {
  QPoly factor;  // direction parameter; degree > 1 means a conjugate family
  bool at_infinity = false;
  int conjugates = 1;
  SegreType segre = SegreType::S111;
  Partition partition;
  // Filled for rational lines from the intersection with the discriminant cubic.
  std::vector<int> cubic_profile;
};

struct PredictedSymbol {
  std::vector<SpecialLine> lines;
  std::vector<Partition> partitions;  // canonical order
};

// Ramification over the point of P^1 given by a pencil of conics.
Partition partition_for_segre(SegreType t);

// Reads the ramification of the cover from the pencils of conics cut out by
// the lines through xi that meet the discriminant cubic non-transversally.
PredictedSymbol predicted_symbol(const AlgebraicQuadruple& q);

}  // namespace cq
