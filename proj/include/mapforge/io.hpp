#pragma once

#include "mapforge/bijector.hpp"
#include "mapforge/mapkit.hpp"
#include "mapforge/series.hpp"
#include "mapforge/tamari.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace mapforge {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "mapforge/1";

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);
Json to_json(const IntegerPartition& p);
IntegerPartition partition_from_json(const Json& j);

// Big numbers travel as decimal strings.
Json exact_json(const BigInt& x);
Json exact_json(const Rational& x);

using AnyMap = std::variant<GeneralRotation, BipartiteRotation, ConstellationRotation, HypermapRotation>;

// {"schema", "flavor", "n", "m"?, "perms": {...}}
Json map_to_json(const AnyMap& map);
Json map_to_json(const GeneralRotation& map);
AnyMap map_from_json(const Json& j);
GeneralRotation general_map_from_json(const Json& j);
std::string flavor_name(const AnyMap& map);

// Nested {"children": [...]}, leaves {"label": k}.
Json tree_to_json(const DecoratedTree& t);
DecoratedTree tree_from_json(const Json& j);

Json interval_to_json(const SyncInterval& iv);
SyncInterval interval_from_json(const Json& j);

// Reads a whole file, "-" for stdin.
std::string read_text(const std::string& path);
Json read_json(const std::string& path);

// RFC 4180 quoting where needed.
std::string csv_line(const std::vector<std::string>& cells);
std::string csv_table(const std::vector<std::vector<std::string>>& rows);
// Header "theta" then one column per class, rows keyed by partition strings.
std::vector<std::vector<std::string>> character_table_rows(int n);

}  // namespace mapforge
