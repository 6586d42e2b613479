#pragma once

// JSON structure documents: the user-facing serialization of a carrier with
// its open sets (or a subbasis), the two Cayley tables, and an optional
// homomorphism section. Labels are the surface; indices stay internal.
//
// Schema:
//   {
//     "name": "...",                      // optional display name
//     "elements": ["a","b",...],
//     "open_sets": [["a"],...]            // exactly one of open_sets /
//     "subbasis":  [["a"],...],           //   subbasis must be present
//     "add": [["a","b",...], ...],        // n rows of n labels, row = left operand
//     "mul": [["a","a",...], ...],
//     "hom": {                            // optional
//       "target": { ...document without hom... },
//       "map": {"a": "0", ...}            // total on elements
//     }
//   }

#include <nlohmann/json.hpp>

#include "ringtop/theorems.hpp"

namespace ringtop {

struct LoadedStructure {
  TopoRingStructure structure;
  std::optional<HomSection> hom;
  bool operator==(const LoadedStructure&) const = default;
};

/// Throws InputError on schema or validation problems.
LoadedStructure load_structure_document(const nlohmann::json& document);
LoadedStructure load_structure_file(const std::string& path);

/// Canonical serialization: always emits open_sets, even when the input used
/// a subbasis. Reparsing yields an identical structure.
nlohmann::json structure_document(const LoadedStructure& loaded);

}  // namespace ringtop
