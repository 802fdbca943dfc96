#pragma once

#include <string>
#include <vector>

#include "cq/exactalg/json_io.hpp"

namespace cq {

struct ManifestEntry {
  std::string name;
  std::string kind;  // net | pencil | quadruple | frobenius-pair | euler-form
  std::string file;
  std::string basis;  // published | derived | trivial
  Json expect;
};

struct FixtureManifest {
  std::string dir;
  std::vector<ManifestEntry> entries;
};

FixtureManifest load_manifest(const std::string& path);
FixtureManifest manifest_from_json(const Json& j, const std::string& dir);

struct ItemResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ManifestReport {
  std::vector<ItemResult> items;
  std::vector<std::string> warnings;
  bool passes() const;
};

// Runs every entry; a failing or throwing entry is recorded and the run continues.
ManifestReport verify_manifest(const FixtureManifest& m);

}  // namespace cq
