#pragma once

#include <nlohmann/json.hpp>

#include "deletia/hash/family.hpp"

namespace deletia::hash {

/// Rebuilds a family from {"name": ..., "params": {...}}; composite
/// families nest descriptors in their params.
FamilyPtr make_family(const nlohmann::json& descriptor);

/// Descriptor plus the seed its key pool is drawn from.
struct FamilySpec {
  FamilyPtr family;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static FamilySpec from_json(const nlohmann::json& j);
};

}  // namespace deletia::hash
