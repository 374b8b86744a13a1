#pragma once

#include <optional>
#include <string>

#include "mcy/poset.hpp"

namespace mcy {

// Dynkin provenance of a catalog poset, when it arises as a minuscule poset.
struct MinusculeOrigin {
  char family;  // 'A', 'D', 'E'
  int rank;
  int node;                // Bourbaki label
  std::string word;        // reduced word digits for the Schubert element; empty = full P_Q
};

struct CatalogEntry {
  Poset poset;
  std::optional<MinusculeOrigin> origin;
};

// Named posets: "sigma", "chain-n", "antichain-n", "rect-a-b", "og510",
// "op2", "quadric-2n", "e7". Throws on unknown names.
CatalogEntry catalog_poset(const std::string& name);
std::vector<std::string> catalog_names();

// Poset JSON schema:
// {"elements": [...], "covers": [["upper","lower"],...],
//  "embedding": {"a": ["b","c"], ...}}
Poset poset_from_json(const std::string& json_text);
std::string poset_to_json(const Poset& p);

// Resolves a name from the catalog or, if it names a readable file, parses it.
CatalogEntry resolve_poset(const std::string& name_or_path);

}  // namespace mcy
