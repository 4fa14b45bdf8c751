#pragma once

#include "equikh/borel.hpp"
#include "equikh/complex.hpp"
#include "equikh/reduce.hpp"

#include <json.hpp>

namespace equikh {

inline constexpr const char* kSchemaComplex = "equikh.complex.v1";
inline constexpr const char* kSchemaPresentation = "equikh.presentation.v1";
inline constexpr const char* kEngineVersion = "equikh-1.0";

nlohmann::json to_json(const FreeComplex& c);
FreeComplex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ModulePresentation& p);

nlohmann::json to_json(const SqGrid& g);

// deterministic serialization (sorted keys, no floats)
std::string dump_deterministic(const nlohmann::json& j);

} // namespace equikh
