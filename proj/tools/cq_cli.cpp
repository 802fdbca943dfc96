#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cq/cliffordgr/graded_clifford.hpp"
#include "cq/core/error.hpp"
#include "cq/correspondence/predicted.hpp"
#include "cq/correspondence/pushforward.hpp"
#include "cq/correspondence/quadruple.hpp"
#include "cq/frobenius/frobenius.hpp"
#include "cq/kgroup/mutation.hpp"
#include "cq/preproj/preproj.hpp"
#include "cq/verify/acceptance.hpp"
#include "cq/verify/manifest.hpp"
#include "support/float_oracle.hpp"

using namespace cq;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;
constexpr int kNotFound = 3;

// Thrown by commands whose search came back empty.
struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_input(const std::string& path) {
  if (path != "-") return read_json_file(path);
  const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::IrrationalSpecialLine: return kNotFound;
    case ErrorCode::InternalInconsistency: return kFailed;
    default: return kInvalid;
  }
}

std::vector<long double> to_float(const QBinaryForm& f) {
  std::vector<long double> c;
  for (const auto& a : f.coeffs()) c.push_back(static_cast<long double>(a.get_d()));
  return c;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json classification_json(const NetClassification& c) {
  return {{"type", net_type_name(c.type)},
          {"basepoint_free", c.basepoint_free},
          {"double_lines", c.double_lines},
          {"jacobian_degree", c.jacobian_degree},
          {"low_confidence", c.low_confidence},
          {"diagnostics", strings(c.diagnostics)}};
}

ProjPoint parse_point(const std::string& s) {
  ProjPoint p;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      p.push_back(rat_from_json(Json(part)));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidInput, "bad point coordinate '" + part + "'");
    }
  }
  if (p.size() != 3) fail(ErrorCode::InvalidInput, "a point needs three comma-separated coordinates");
  return p;
}

ProjPoint choose_point(const AlgebraicQuadruple& q, const Json& input, const std::string& flag, int height_bound) {
  if (!flag.empty()) return parse_point(flag);
  if (input.is_object() && input.contains("point")) return vector_from_json(input.at("point"), 3);
  if (auto p = find_rational_point(xi_conic(q), height_bound)) return *p;
  throw NotFound("no rational point on the xi-conic up to height " + std::to_string(height_bound));
}

Json pencil_summary(const BinaryQuarticPencil& p) {
  const auto s = symbol(p);
  return {{"pencil", pencil_to_json(p)},
          {"symbol", symbol_to_json(s.partitions)},
          {"symbol_string", symbol_to_string(s.partitions)},
          {"type", std::string(1, pencil_type_for_symbol(s.partitions).label)}};
}

Json pencil_quadruple_json(const PencilQuadruple& pq) {
  Json basis = Json::array();
  for (const auto& f : pq.e_basis) basis.push_back(vector_to_json(f.coeffs()));
  Json rel = Json::array();
  for (const auto& m : pq.relation_space) rel.push_back(matrix_to_json(m));
  return {{"quadruple", quadruple_to_json(pq.quadruple)},
          {"point", vector_to_json(normalize_point(pq.veronese.col(0)))},
          {"e_basis", basis},
          {"relation_space", rel},
          {"relations_symmetric", pq.relations_symmetric},
          {"veronese", matrix_to_json(pq.veronese)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Nets of conics, graded Clifford algebras and pencils of binary quartics");
  app.require_subcommand(1);

  std::string input = "-";
  int max_degree = 6;
  int depth = 12;
  int height_bound = 10;
  int twist = 0;
  std::uint64_t seed = 20240611;
  std::string point_flag;
  std::vector<int> expect_fail;
  bool no_criteria = false;

  std::function<Json()> action;
  int status = kOk;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "JSON input file, or - for standard input");
    return sub;
  };

  add("classify-net", "classify a net of conics")->callback([&] {
    action = [&] {
      const auto c = classify_net(net_from_json(read_input(input)));
      if (c.type == NetType::Unrecognized) status = kNotFound;
      return classification_json(c);
    };
  });

  add("classify-pencil", "symbol and type of a pencil of binary quartics")->callback([&] {
    action = [&] {
      const auto p = pencil_from_json(read_input(input));
      const auto s = symbol(p);
      Json points = Json::array();
      for (const auto& b : s.points)
        points.push_back({{"partition", b.partition},
                          {"at_infinity", b.at_infinity},
                          {"factor", b.at_infinity ? std::string() : to_string(b.factor, "t")},
                          {"conjugates", b.conjugates}});
      return Json{{"type", std::string(1, classify_pencil(p).label)},
                  {"symbol", symbol_to_json(s.partitions)},
                  {"symbol_string", symbol_to_string(s.partitions)},
                  {"riemann_hurwitz", s.riemann_hurwitz},
                  {"branch_points", points}};
    };
  });

  add("clifford-hilbert", "Hilbert function of the graded Clifford algebra of a net")
      ->callback([&] {
        action = [&] {
          const auto g = GradedCliffordAlgebra::from_net(net_from_json(read_input(input)));
          Json out{{"hilbert", hilbert_function(g, max_degree)}};
          try {
            out["point_scheme_cubic"] = multipoly_to_json(point_scheme_cubic(g).poly());
          } catch (const Error& e) {
            if (e.code() != ErrorCode::IdenticallyZero) throw;
            out["point_scheme_cubic"] = nullptr;
          }
          return out;
        };
      })
      ->add_option("--max-degree", max_degree, "top degree (at most 8)");

  add("frobenius-check", "Frobenius quotient of a basepoint-free net")->callback([&] {
    action = [&] {
      const auto fq = frobenius_quotient(net_from_json(read_input(input)));
      const auto sc = structure_constants(fq);
      const auto ab = alpha_beta_check(fq);
      const auto ck = coker_phi_hilbert_check(fq, 10);
      const bool ok = fq.hilbert == std::vector<std::size_t>{1, 3, 3, 1} && sc.totally_symmetric && ab.passes() && ck.equal;
      if (!ok) status = kFailed;
      return Json{{"hilbert", fq.hilbert},
                  {"totally_symmetric", sc.totally_symmetric},
                  {"alpha_beta", ab.passes()},
                  {"alpha_scalar", rat_to_json(ab.alpha_scalar)},
                  {"coker_phi_dims", ck.coker_dims},
                  {"omega_dims", ck.omega_dims},
                  {"coker_phi_equal", ck.equal},
                  {"pass", ok}};
    };
  });

  add("preproj-check", "preprojective algebra of a Frobenius pair")
      ->callback([&] {
        action = [&] {
          const auto p = make_frobenius_pair(mult_table_from_json(read_input(input)));
          const auto h = preprojective_H(p);
          Json out{{"pair", frobenius_pair_to_json(p)},
                   {"relation_dim", h.relation_dim},
                   {"symmetric", h.symmetric},
                   {"hilbert_H", hilbert_dims_H(h, max_degree)}};
          if (p.dim() == 4) {
            const auto c = clifford_comparison(p, max_degree);
            out["clifford_dims"] = c.clifford_dims;
            out["isomorphism"] = c.isomorphism;
          }
          return out;
        };
      })
      ->add_option("--max-degree", max_degree, "top degree");

  auto* q2p = add("quadruple-to-pencil", "pencil of quartics from an algebraic quadruple");
  q2p->add_option("--point", point_flag, "rational point a,b,c on the xi-conic");
  q2p->add_option("--height-bound", height_bound, "height bound for the point search");
  q2p->callback([&] {
    action = [&] {
      const Json j = read_input(input);
      const auto q = quadruple_from_json(j);
      const auto pt = choose_point(q, j, point_flag, height_bound);
      Json out = pencil_summary(quadruple_to_pencil(q, pt));
      out["point"] = vector_to_json(pt);
      return out;
    };
  });

  auto* p2q = add("pencil-to-quadruple", "algebraic quadruple of a basepoint-free pencil");
  p2q->add_option("--twist", twist, "also report the splitting type of the pushforward twisted by this degree");
  p2q->callback([&] {
    action = [&] {
      const auto p = pencil_from_json(read_input(input));
      Json out = pencil_quadruple_json(pencil_to_quadruple(p));
      out["pushforward_splitting"] = pushforward_splitting(p, twist);
      return out;
    };
  });

  auto* rt = add("roundtrip", "quadruple -> pencil -> quadruple and compare");
  rt->add_option("--point", point_flag, "rational point a,b,c on the xi-conic");
  rt->add_option("--height-bound", height_bound, "height bound for the point search");
  rt->callback([&] {
    action = [&] {
      const Json j = read_input(input);
      const auto q = quadruple_from_json(j);
      const auto r = roundtrip_check(q, choose_point(q, j, point_flag, height_bound));
      if (r.status == IsoStatus::Mismatch) status = kFailed;
      Json out{{"status", iso_status_name(r.status)}, {"diagnostics", strings(r.diagnostics)}};
      if (r.pencil) out["pencil"] = pencil_summary(*r.pencil);
      if (r.rederived) out["rederived"] = quadruple_to_json(r.rederived->quadruple);
      if (r.e_map) out["e_map"] = matrix_to_json(*r.e_map);
      if (r.v_map) out["v_map"] = matrix_to_json(*r.v_map);
      if (!r.invariants_original.empty()) {
        out["invariants_original"] = strings(r.invariants_original);
        out["invariants_rederived"] = strings(r.invariants_rederived);
      }
      return out;
    };
  });

  add("predicted-symbol", "symbol predicted from the lines through xi")->callback([&] {
    action = [&] {
      const auto pr = predicted_symbol(quadruple_from_json(read_input(input)));
      Json lines = Json::array();
      for (const auto& l : pr.lines)
        lines.push_back({{"at_infinity", l.at_infinity},
                         {"factor", l.at_infinity ? std::string() : to_string(l.factor, "t")},
                         {"conjugates", l.conjugates},
                         {"partition", l.partition}});
      return Json{{"symbol", symbol_to_json(pr.partitions)},
                  {"symbol_string", symbol_to_string(pr.partitions)},
                  {"lines", lines}};
    };
  });

  add("mutation-search", "search for a mutation path between two Euler forms")
      ->callback([&] {
        action = [&] {
          const Json j = read_input(input);
          if (!j.is_object() || !j.contains("source") || !j.contains("target"))
            fail(ErrorCode::InvalidInput, "expected {\"source\": ..., \"target\": ...}");
          const auto src = euler_form_from_json(j.at("source"));
          const auto dst = euler_form_from_json(j.at("target"));
          const auto r = mutation_equivalent(src, dst, depth);
          if (!r.path) throw NotFound("no mutation path within depth " + std::to_string(depth));
          return Json{{"path", path_to_json(*r.path)},
                      {"mutations", r.mutations},
                      {"states_visited", r.states_visited},
                      {"replays", replay(src, *r.path) == dst}};
        };
      })
      ->add_option("--depth", depth, "maximum number of mutations");

  add("euler-axioms", "surface axioms for a rank-4 Euler form")->callback([&] {
    action = [&] {
      const auto r = check_surface_axioms(euler_form_from_json(read_input(input)));
      if (!r.passes()) status = kFailed;
      return Json{{"serre_identity", r.serre_identity},
                  {"unipotent", r.unipotent},
                  {"rank_s_minus_id", r.rank_s_minus_id},
                  {"characteristic_polynomial", to_string(r.characteristic_polynomial, "t")},
                  {"pass", r.passes()}};
    };
  });

  auto* va = add("verify-all", "check a fixture manifest and run the acceptance criteria");
  va->add_option("--seed", seed, "seed for the randomized criteria");
  va->add_option("--expect-fail", expect_fail, "criteria known to fail");
  va->add_flag("--no-criteria", no_criteria, "only check the manifest entries");
  va->callback([&] {
    action = [&] {
      if (input == "-") fail(ErrorCode::InvalidInput, "verify-all needs a manifest path");
      const auto m = load_manifest(input);
      const auto rep = verify_manifest(m);
      Json items = Json::array();
      for (const auto& i : rep.items) items.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
      bool ok = rep.passes();
      Json out{{"manifest", items}, {"warnings", strings(rep.warnings)}};
      if (!no_criteria) {
        AcceptanceOptions opt;
        opt.fixture_dir = m.dir;
        opt.seed = seed;
        opt.oracle = [](const BinaryQuarticPencil& p) {
          return cqtest::float_symbol(to_float(p.f1()), to_float(p.f2()));
        };
        Json crit = Json::array();
        std::set<int> failed;
        for (const auto& r : run_acceptance(opt)) {
          crit.push_back({{"id", r.id},
                          {"title", r.title},
                          {"pass", r.pass},
                          {"seconds", r.seconds},
                          {"detail", r.detail},
                          {"line", format_result(r)}});
          if (!r.pass) failed.insert(r.id);
        }
        out["criteria"] = crit;
        out["failed_criteria"] = failed;
        ok = ok && failed == std::set<int>(expect_fail.begin(), expect_fail.end());
      }
      out["pass"] = ok;
      if (!ok) status = kFailed;
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << error_json("usage", e.what()).dump(2) << std::endl;
    return kInvalid;
  }

  try {
    const Json out = action();
    std::cout << out.dump(2) << std::endl;
    return status;
  } catch (const NotFound& e) {
    std::cout << error_json("NotFound", e.what()).dump(2) << std::endl;
    return kNotFound;
  } catch (const Error& e) {
    std::cout << error_json(error_name(e.code()), e.what()).dump(2) << std::endl;
    return exit_for(e.code());
  } catch (const Json::exception& e) {
    std::cout << error_json("InvalidInput", e.what()).dump(2) << std::endl;
    return kInvalid;
  } catch (const std::exception& e) {
    std::cout << error_json("InternalError", e.what()).dump(2) << std::endl;
    return kFailed;
  }
}
