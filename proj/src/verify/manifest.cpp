#include "cq/verify/manifest.hpp"

#include <filesystem>

#include "cq/core/error.hpp"
#include "cq/correspondence/predicted.hpp"
#include "cq/correspondence/quadruple.hpp"
#include "cq/kgroup/mutation.hpp"
#include "cq/nets/net.hpp"
#include "cq/pencils/pencil.hpp"
#include "cq/preproj/preproj.hpp"

namespace cq {

namespace {

std::string path_in(const FixtureManifest& m, const std::string& file) {
  return (std::filesystem::path(m.dir) / file).string();
}

void expect_equal(std::vector<std::string>& bad, const std::string& what, const Json& want, const Json& got) {
  if (want != got) bad.push_back(what + ": expected " + want.dump() + ", got " + got.dump());
}

std::vector<std::string> check_net(const Json& j, const Json& expect) {
  std::vector<std::string> bad;
  const auto c = classify_net(net_from_json(j));
  if (expect.contains("type")) expect_equal(bad, "type", expect.at("type"), net_type_name(c.type));
  if (expect.contains("double_lines")) expect_equal(bad, "double_lines", expect.at("double_lines"), c.double_lines);
  if (expect.contains("basepoint_free"))
    expect_equal(bad, "basepoint_free", expect.at("basepoint_free"), c.basepoint_free);
  return bad;
}

std::vector<std::string> check_pencil(const Json& j, const Json& expect) {
  std::vector<std::string> bad;
  const auto p = pencil_from_json(j);
  const auto s = symbol(p).partitions;
  if (expect.contains("symbol")) expect_equal(bad, "symbol", expect.at("symbol"), symbol_to_string(s));
  if (expect.contains("type")) expect_equal(bad, "type", expect.at("type"), std::string(1, pencil_type_for_symbol(s).label));
  return bad;
}

std::vector<std::string> check_quadruple(const Json& j, const Json& expect) {
  std::vector<std::string> bad;
  const auto q = quadruple_from_json(j);
  ProjPoint pt;
  if (j.contains("point")) {
    pt = vector_from_json(j.at("point"), 3);
  } else if (auto found = find_rational_point(xi_conic(q), 10)) {
    pt = *found;
  } else {
    return {"no rational point on the xi-conic up to height 10"};
  }
  const auto p = quadruple_to_pencil(q, pt);
  const auto s = symbol(p).partitions;
  if (expect.contains("symbol")) expect_equal(bad, "symbol", expect.at("symbol"), symbol_to_string(s));
  const auto predicted = predicted_symbol(q).partitions;
  if (predicted != s) bad.push_back("predicted symbol " + symbol_to_string(predicted) + " differs");
  if (expect.contains("roundtrip")) {
    const auto r = roundtrip_check(q, pt);
    const bool want_iso = expect.at("roundtrip") == "iso";
    if (want_iso && r.status == IsoStatus::Mismatch) bad.push_back("roundtrip reported Mismatch");
    if (!want_iso && r.status != IsoStatus::Mismatch) bad.push_back("roundtrip expected to mismatch");
  }
  return bad;
}

std::vector<std::string> check_pair(const Json& j, const Json& expect) {
  std::vector<std::string> bad;
  const auto pair = make_frobenius_pair(mult_table_from_json(j));
  if (expect.contains("hilbert_H")) {
    const auto& want = expect.at("hilbert_H");
    const int n = static_cast<int>(want.size()) - 1;
    expect_equal(bad, "hilbert_H", want, hilbert_dims_H(preprojective_H(pair), n));
  }
  return bad;
}

std::vector<std::string> check_euler(const FixtureManifest& m, const Json& j, const Json& expect) {
  std::vector<std::string> bad;
  const auto e = euler_form_from_json(j);
  if (expect.contains("surface_axioms"))
    expect_equal(bad, "surface_axioms", expect.at("surface_axioms"), check_surface_axioms(e).passes());
  if (expect.contains("mutation_equivalent_to")) {
    const auto target = euler_form_from_json(read_json_file(path_in(m, expect.at("mutation_equivalent_to"))));
    const int depth = expect.value("depth", 12);
    const auto r = mutation_equivalent(e, target, depth);
    if (!r.path)
      bad.push_back("no mutation path within depth " + std::to_string(depth));
    else if (!(replay(e, *r.path) == target))
      bad.push_back("mutation path does not replay to the target");
  }
  return bad;
}

}  // namespace

bool ManifestReport::passes() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

FixtureManifest manifest_from_json(const Json& j, const std::string& dir) {
  if (!j.is_object() || !j.contains("fixtures") || !j.at("fixtures").is_array())
    fail(ErrorCode::InvalidInput, "manifest needs a fixtures array");
  FixtureManifest m;
  m.dir = dir;
  for (const auto& e : j.at("fixtures")) {
    if (!e.is_object() || !e.contains("name") || !e.contains("kind") || !e.contains("file"))
      fail(ErrorCode::InvalidInput, "manifest entries need name, kind and file");
    m.entries.push_back({e.at("name").get<std::string>(), e.at("kind").get<std::string>(), e.at("file").get<std::string>(),
                         e.value("basis", std::string()), e.value("expect", Json::object())});
  }
  return m;
}

FixtureManifest load_manifest(const std::string& path) {
  return manifest_from_json(read_json_file(path), std::filesystem::absolute(path).parent_path().string());
}

ManifestReport verify_manifest(const FixtureManifest& m) {
  ManifestReport rep;
  if (m.entries.empty()) rep.warnings.push_back("manifest has no fixtures");
  for (const auto& e : m.entries) {
    ItemResult item{e.name, false, {}};
    try {
      const Json j = read_json_file(path_in(m, e.file));
      std::vector<std::string> bad;
      if (e.kind == "net")
        bad = check_net(j, e.expect);
      else if (e.kind == "pencil")
        bad = check_pencil(j, e.expect);
      else if (e.kind == "quadruple")
        bad = check_quadruple(j, e.expect);
      else if (e.kind == "frobenius-pair")
        bad = check_pair(j, e.expect);
      else if (e.kind == "euler-form")
        bad = check_euler(m, j, e.expect);
      else
        bad.push_back("unknown fixture kind " + e.kind);
      item.pass = bad.empty();
      for (const auto& b : bad) item.detail += (item.detail.empty() ? "" : "; ") + b;
    } catch (const std::exception& err) {
      item.detail = err.what();
    }
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace cq
