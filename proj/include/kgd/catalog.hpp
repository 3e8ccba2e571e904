#ifndef KGD_CATALOG_HPP
#define KGD_CATALOG_HPP

#include <string>
#include <vector>

#include "kgd/configuration.hpp"

namespace kgd {

/// One row of the built-in packing catalog.
struct CatalogEntry {
  std::string name;   // canonical identifier accepted by generate()
  int d = 0;
  int m = 0;
  std::string group;  // symmetry family label (A2, H3, D4, ...)
  bool kissing = false;
  std::string comment;
};

/// The built-in catalog of symmetric line packings (root systems, the
/// icosahedral solids, the regular 4-polytopes, equiangular tight frames and
/// compounds).  Every entry can be generated exactly.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds a catalog configuration by name.  Accepts canonical names and the
/// common aliases (A2/hexagon, D3/A3/cuboctahedron, D4/24cell,
/// ETF-28-d7/ETF28, E7+ETF-91/E7+ETF, 600cell+120cell).  Throws
/// catalog_error for unknown names.
Configuration generate(const std::string& name);

/// True if the name (or an alias) is in the catalog.
bool catalog_has(const std::string& name);

}  // namespace kgd

#endif  // KGD_CATALOG_HPP
