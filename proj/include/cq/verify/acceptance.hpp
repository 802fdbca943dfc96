#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cq/pencils/pencil.hpp"

namespace cq {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

// Independent symbol computation used for cross-checking pencils.
using SymbolOracle = std::function<std::vector<Partition>(const BinaryQuarticPencil&)>;

struct AcceptanceOptions {
  std::string fixture_dir;
  std::uint64_t seed = 20240611;
  SymbolOracle oracle;
  std::vector<int> only;  // empty: all criteria
};

constexpr int kCriterionCount = 13;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "PASS  7  <title>  [0.12 s / 30 s]  <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace cq
