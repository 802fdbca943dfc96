#pragma once

#include <string>
#include <vector>

#include "cq/exactalg/binaryform.hpp"
#include "cq/exactalg/json_io.hpp"

namespace cq {

// Two independent binary quartics; the map [x:y] -> [f1(x,y) : f2(x,y)].
class BinaryQuarticPencil {
 public:
  BinaryQuarticPencil(QBinaryForm f1, QBinaryForm f2);
  const QBinaryForm& f1() const { return f1_; }
  const QBinaryForm& f2() const { return f2_; }

  // Source change (x, y) -> (a x + b y, c x + d y).
  BinaryQuarticPencil reparametrize(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;
  // Target change (f1, f2) -> (a f1 + b f2, c f1 + d f2).
  BinaryQuarticPencil retarget(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

 private:
  QBinaryForm f1_, f2_;
};

bool is_basepoint_free(const BinaryQuarticPencil& p);

// Binary sextic D(a, b) (coefficient i on a^i b^(6-i)) vanishing at the
// branch points [a:b], whose fibres are the zeros of b f1 - a f2.
QBinaryForm discriminant_sextic(const BinaryQuarticPencil& p);

using Partition = std::vector<int>;

struct BranchPoint {
  Partition partition;
  bool at_infinity = false;  // the point [1:0]
  QPoly factor;              // irreducible factor of D(t, 1) otherwise
  int conjugates = 1;        // number of branch points sharing this data
  int discriminant_multiplicity = 0;
};

struct Symbol {
  std::vector<BranchPoint> points;
  std::vector<Partition> partitions;  // conjugates expanded, canonical order
  int riemann_hurwitz = 0;
};

Symbol symbol(const BinaryQuarticPencil& p);

// Canonical order of a multiset of partitions, and its printed form "[(4)(2,2)]".
std::vector<Partition> canonical_symbol(std::vector<Partition> s);
std::string symbol_to_string(const std::vector<Partition>& s);
std::vector<Partition> parse_symbol(const std::string& s);

struct PencilTypeInfo {
  char label;
  std::vector<Partition> symbol;
  const char* discriminant_cubic;
  int moduli;
};

const std::vector<PencilTypeInfo>& pencil_types();
const PencilTypeInfo& pencil_type_for_symbol(const std::vector<Partition>& s);
const PencilTypeInfo& classify_pencil(const BinaryQuarticPencil& p);

BinaryQuarticPencil pencil_from_json(const Json& j);
Json pencil_to_json(const BinaryQuarticPencil& p);
Json symbol_to_json(const std::vector<Partition>& s);

}  // namespace cq
