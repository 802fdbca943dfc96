#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "cq/exactalg/matrix.hpp"
#include "cq/exactalg/multipoly.hpp"
#include "cq/exactalg/rat.hpp"

namespace cq {

using Json = nlohmann::json;

// Rationals are encoded as "p/q" strings; integers are also accepted on input.
Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json vector_to_json(const std::vector<Rat>& v);
std::vector<Rat> vector_from_json(const Json& j, std::size_t expected_size = 0);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, std::size_t rows = 0, std::size_t cols = 0);

// {"vars":[...], "terms":[{"exp":[...], "coef":"p/q"}]}
Json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

// Parses a file; malformed content raises InvalidInput.
Json read_json_file(const std::string& path);

}  // namespace cq
