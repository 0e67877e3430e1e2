#pragma once

#include <optional>
#include <string>

#include "crlie/liealg.hpp"

namespace crlie {

struct CatalogError : Error {
  using Error::Error;
};

/// Optional CR data shipped inside a catalog file; vectors and forms are
/// linear-combination expressions over the basis names (lowercased names for
/// dual forms).
struct CatalogCR {
  std::vector<std::string> k;  // spanning vectors of the complex subalgebra
  std::string phi;             // adapted contact form
};

struct CatalogEntry {
  LieAlgebra algebra;
  std::optional<CatalogCR> cr;
};

CatalogEntry load_catalog(const std::string& path);
CatalogEntry parse_catalog(const std::string& json_text);
std::string catalog_to_json(const LieAlgebra& g);

/// Directory with the shipped catalog files: the CRLIE_CATALOGS environment
/// variable when set, otherwise the build-time default.
std::string default_catalog_dir();

}  // namespace crlie
