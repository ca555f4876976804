#pragma once

#include <string>

#include "json.hpp"

#include "catalan/fin_monoidal.hpp"
#include "catalan/skew.hpp"
#include "catalan/sset.hpp"

namespace catalan {

/// Key order is insertion order, so serialised output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parse a document; syntax errors become SchemaError with line and column.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json sset_to_json(const TruncatedSSet& s);
TruncatedSSet sset_from_json(const Json& j);

/// Category block: objects, morphisms, identities and compose, all by label.
Json category_to_json(const FinCategory& c);
FinCategory category_from_json(const Json& j, const std::string& where = "");

/// kind "category" (explicit tables) or kind "poset" (elements, leq, tensor).
/// Only the document shape is checked here; run validate_strict_monoidal on
/// the result for the laws.
Json structure_to_json(const FinMonoidalStructure& m);
FinMonoidalStructure structure_from_json(const Json& j);

/// Category block plus tensor tables, unit, alpha/lambda/rho keyed by object
/// labels and an optional kappa.
Json skew_to_json(const SkewData& d);
SkewData skew_from_json(const Json& j);

}  // namespace catalan
