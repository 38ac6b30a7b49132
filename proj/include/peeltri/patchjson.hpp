#pragma once

#include <json.hpp>

#include "peeltri/tricomplex.hpp"

namespace peeltri::map {

/// Patch format:
///   {"faces": N, "gluings": [[[f,s],[f2,s2]], ...], "root": [f,s,orient]}
/// with optional "holes": [[[f,s], ...], ...] listing the hole cycles when
/// they differ from the ones derived by boundary walks, and zero-face values
/// serialized as {"sentinel": "T10"|"T20"|"T110"}.
nlohmann::json to_patch_json(const TriComplex& t);
TriComplex from_patch_json(const nlohmann::json& j);

}  // namespace peeltri::map
