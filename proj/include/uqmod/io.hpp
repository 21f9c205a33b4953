#pragma once

#include <json.hpp>

#include <string>

#include "uqmod/datum.hpp"
#include "uqmod/rep.hpp"

namespace uqmod {

using Json = nlohmann::ordered_json;

// Field / group / character fragments
Json field_to_json(const FieldContext& F);
FieldCtx field_from_json(const Json& j);
Json group_to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const Json& j);
/// Character from a list of scalar literals, one per generator.
Character character_from_json(FieldCtx F, const FgAbelianGroup& grp, const Json& j,
                              const std::string& path);
Character character_from_literals(FieldCtx F, const FgAbelianGroup& grp, const std::string& csv);
Json character_to_json(const Character& c);

// Datum files: either a full datum (keys g/chi/cartan/linking) or a reduced
// datum (keys L/K/chi/cartan/l). Indices in files are 1-based.
bool is_reduced_file(const Json& j);
std::pair<CartanDatum, LinkingData> datum_from_json(const Json& j);
Json datum_to_json(const CartanDatum& d, const LinkingData& lam);
ReducedDatum reduced_from_json(const Json& j);
Json reduced_to_json(const ReducedDatum& rd);

// Computed modules
Json rep_to_json(const ModuleRep& rep);
ModuleRep rep_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace uqmod
