#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "cq/exactalg/json_io.hpp"
#include "cq/verify/manifest.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  cq::Json out;
};

std::string fixture(const std::string& name) { return (fs::path(CQ_FIXTURE_DIR) / name).string(); }

Run run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = std::string("'") + CQ_CLI_PATH + "' " + args;
  fs::path in_file;
  if (!stdin_text.empty()) {
    in_file = fs::temp_directory_path() / ("cq_cli_stdin_" + std::to_string(::getpid()) + ".json");
    std::ofstream(in_file) << stdin_text;
    cmd += " < '" + in_file.string() + "'";
  }
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  const int status = ::pclose(pipe);
  if (!in_file.empty()) fs::remove(in_file);
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = cq::Json::parse(text);
  return r;
}

fs::path scratch_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("cq_cli_" + name + "_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("classification commands") {
  auto r = run("classify-net '" + fixture("nE.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("type") == "E");
  CHECK(r.out.at("double_lines") == 3);

  r = run("classify-net '" + fixture("basepoint_net.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("type") == "HasBasepoint");

  r = run("classify-pencil '" + fixture("x4y4.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("type") == "A");
  CHECK(r.out.at("symbol") == cq::Json::parse("[[4],[4]]"));
  CHECK(r.out.at("riemann_hurwitz") == 6);
}

TEST_CASE("malformed and invalid input") {
  auto r = run("classify-net -", "{\"grams\": [");
  CHECK(r.code == 2);
  CHECK(r.out.contains("error"));

  r = run("classify-pencil -", R"({"f1": [1, 0, 0, 0, 0], "f2": [2, 0, 0, 0, 0]})");
  CHECK(r.code == 2);
  CHECK(r.out.contains("error"));

  r = run("classify-net '" + fixture("does_not_exist.json") + "'");
  CHECK(r.code == 2);

  r = run("no-such-command");
  CHECK(r.code == 2);
  CHECK(r.out.contains("error"));
}

TEST_CASE("algebra commands") {
  auto r = run("clifford-hilbert '" + fixture("nD.json") + "' --max-degree 4");
  CHECK(r.code == 0);
  CHECK(r.out.at("hilbert") == cq::Json::parse("[1,3,6,10,15]"));

  r = run("frobenius-check '" + fixture("nB.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("hilbert") == cq::Json::parse("[1,3,3,1]"));
  CHECK(r.out.at("pass") == true);

  r = run("preproj-check '" + fixture("pair_cyclic4.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("hilbert_H") == cq::Json::parse("[1,3,5,7,9,11,13]"));
  CHECK(r.out.at("isomorphism") == true);

  r = run("euler-axioms '" + fixture("euler_blowup.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("pass") == true);
  CHECK(r.out.at("rank_s_minus_id") == 2);
}

TEST_CASE("correspondence commands") {
  auto r = run("quadruple-to-pencil '" + fixture("quad_E1.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("symbol_string") == "[(2,2)(2,2)(2,2)]");

  r = run("quadruple-to-pencil '" + fixture("quad_A.json") + "' --point 1,0,0");
  CHECK(r.code == 0);
  CHECK(r.out.at("type") == "A");

  r = run("quadruple-to-pencil '" + fixture("quad_A.json") + "' --point 1,1,1");
  CHECK(r.code == 2);
  CHECK(r.out.at("error").at("kind") == "PointNotOnConic");

  // x^2 + y^2 + z^2 has no rational point.
  const std::string no_point = R"({"net": )" + cq::read_json_file(fixture("nE.json")).dump() + R"(, "xi": [1, 1, 1]})";
  r = run("quadruple-to-pencil - --height-bound 3", no_point);
  CHECK(r.code == 3);
  CHECK(r.out.at("error").at("kind") == "NotFound");

  r = run("pencil-to-quadruple '" + fixture("pencil_B.json") + "' --twist 2");
  CHECK(r.code == 0);
  CHECK(r.out.at("relations_symmetric") == true);
  CHECK(r.out.at("pushforward_splitting") == cq::Json::parse("[0,0,0,-1]"));

  r = run("roundtrip '" + fixture("quad_B.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("status") == "ExplicitIso");

  r = run("predicted-symbol '" + fixture("quad_M.json") + "'");
  CHECK(r.code == 0);
  CHECK(r.out.at("symbol_string") == "[(2,1,1)(2,1,1)(2,1,1)(2,1,1)(2,1,1)(2,1,1)]");
}

TEST_CASE("mutation search") {
  const std::string pair = R"({"source": )" + cq::read_json_file(fixture("euler_bundle.json")).dump() +
                           R"(, "target": )" + cq::read_json_file(fixture("euler_B2.json")).dump() + "}";
  auto r = run("mutation-search - --depth 12", pair);
  CHECK(r.code == 0);
  CHECK(r.out.at("replays") == true);
  CHECK(r.out.at("path").is_array());

  r = run("mutation-search - --depth 0", pair);
  CHECK(r.code == 3);
  CHECK(r.out.contains("error"));
}

TEST_CASE("manifest verification") {
  auto r = run("verify-all '" + fixture("manifest.json") + "' --no-criteria");
  CHECK(r.code == 0);
  CHECK(r.out.at("pass") == true);
  CHECK(r.out.at("manifest").size() == cq::read_json_file(fixture("manifest.json")).at("fixtures").size());

  const auto empty = scratch_dir("empty");
  std::ofstream(empty / "manifest.json") << R"({"fixtures": []})";
  r = run("verify-all '" + (empty / "manifest.json").string() + "' --no-criteria");
  CHECK(r.code == 0);
  CHECK(r.out.at("warnings").size() == 1);

  const auto wrong = scratch_dir("wrong");
  std::ofstream(wrong / "manifest.json") << R"({"fixtures": [{"name": "mislabelled", "kind": "net", "file": ")"
                                         << fixture("nE.json") << R"(", "expect": {"type": "B"}, "basis": "trivial"}]})";
  r = run("verify-all '" + (wrong / "manifest.json").string() + "' --no-criteria");
  CHECK(r.code == 1);
  CHECK(r.out.at("pass") == false);
  CHECK(r.out.at("manifest").at(0).at("pass") == false);

  const auto rep = cq::verify_manifest(cq::load_manifest((wrong / "manifest.json").string()));
  CHECK_FALSE(rep.passes());
  CHECK(rep.items.at(0).detail.find("type") != std::string::npos);

  fs::remove_all(empty);
  fs::remove_all(wrong);
}
