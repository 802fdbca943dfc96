#include "cq/exactalg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cq {

Json rat_to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  fail(ErrorCode::InvalidInput, "expected a rational as string or integer");
}

Json vector_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

std::vector<Rat> vector_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "expected an array of rationals");
  if (expected_size != 0 && j.size() != expected_size)
    fail(ErrorCode::InvalidInput, "expected " + std::to_string(expected_size) + " entries");
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json matrix_to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::InvalidInput, "expected a nonempty matrix");
  if (rows != 0 && j.size() != rows) fail(ErrorCode::InvalidInput, "matrix has wrong row count");
  std::vector<std::vector<Rat>> r;
  for (const auto& row : j) r.push_back(vector_from_json(row, cols));
  const std::size_t c = r.front().size();
  return QMatrix::from_rows(r, c);
}

Json multipoly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", rat_to_json(c)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    fail(ErrorCode::InvalidInput, "polynomial needs vars and terms");
  MultiPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<Exponent>(), rat_from_json(t.at("coef")));
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace cq
