#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cq/exactalg/binaryform.hpp"
#include "cq/exactalg/json_io.hpp"
#include "cq/nets/net.hpp"
#include "cq/pencils/pencil.hpp"

namespace cq {

// (E, V, phi, xi): E = Q^3 carries the net, V = Q^3 has coordinates
// phi(e_a e_b)_m = (B_m)_ab, and xi is a functional on V.
struct AlgebraicQuadruple {
  NetOfConics net;
  std::vector<Rat> xi;
};

struct QuadrupleValidation {
  bool phi_surjective = false;
  bool basepoint_free = false;
  bool xi_nonzero = false;
  bool off_discriminant = false;
  bool valid() const { return phi_surjective && basepoint_free && xi_nonzero; }
};

QuadrupleValidation validate_quadruple(const AlgebraicQuadruple& q);

// sum_m xi_m B_m, the Gram matrix of the conic Y_xi in P(E).
QMatrix xi_conic(const AlgebraicQuadruple& q);

// Three binary quadrics z(u) with z(u)^T G z(u) = 0 identically, giving an
// isomorphism P^1 -> conic that sends [1:0] to the given point.
std::array<QBinaryForm, 3> parametrize_conic(const QMatrix& gram, const ProjPoint& pt);

// First primitive integer zero of the conic, in order of increasing height.
std::optional<ProjPoint> find_rational_point(const QMatrix& gram, int height_bound);

BinaryQuarticPencil quadruple_to_pencil(const AlgebraicQuadruple& q, const ProjPoint& pt);

// Output of the pencil -> quadruple construction with the data it tracks.
// E is realised as quartics modulo span(f1, f2), with basis the classes of
// e_basis; relation_space holds K inside Sym^2 E as symmetric matrices.
struct PencilQuadruple {
  AlgebraicQuadruple quadruple;
  std::vector<QBinaryForm> e_basis;
  std::vector<QMatrix> relation_space;
  bool relations_symmetric = false;
  // Columns: the images in E of x^2, xy, y^2 under the embedding of the
  // source line as the conic Y_xi. The image of [a:b] is veronese * (a^2, ab, b^2).
  QMatrix veronese;
};

PencilQuadruple pencil_to_quadruple(const BinaryQuarticPencil& p);

enum class IsoStatus { ExplicitIso, InvariantMatch, Mismatch };
const char* iso_status_name(IsoStatus s);

struct QuadrupleIsoReport {
  IsoStatus status = IsoStatus::Mismatch;
  std::optional<BinaryQuarticPencil> pencil;
  std::optional<PencilQuadruple> rederived;
  // ExplicitIso: e_map sends E' to E, v_map writes the pulled back Grams
  // L^T B_m L in the basis B'_n of the rederived net.
  std::optional<QMatrix> e_map;
  std::optional<QMatrix> v_map;
  std::vector<std::string> invariants_original;
  std::vector<std::string> invariants_rederived;
  std::vector<std::string> diagnostics;
};

QuadrupleIsoReport roundtrip_check(const AlgebraicQuadruple& q, const ProjPoint& pt);

AlgebraicQuadruple quadruple_from_json(const Json& j);
Json quadruple_to_json(const AlgebraicQuadruple& q);

}  // namespace cq
