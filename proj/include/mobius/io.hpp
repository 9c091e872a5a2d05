#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "mobius/cohomology.hpp"
#include "mobius/galois.hpp"
#include "mobius/incidence.hpp"
#include "mobius/module.hpp"
#include "mobius/poset.hpp"

namespace mobius::io {

// Insertion-ordered so element order in files is preserved.
using Json = nlohmann::ordered_json;

// Throws ParseError if the file is missing or not JSON.
Json read_json_file(const std::filesystem::path& path);

// {"elements": [...], "relations": [[x, y], ...]}
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

// An integer, or a string "n" / "p/q". Throws ParseError.
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);

// {"kind": "rationals"} or {"kind": "prime", "p": 7}
FieldSpec field_from_json(const Json& j);
Json field_to_json(const FieldSpec& f);

// {"values": {"a": 2, "b": -1}}; every element must be present.
GrFunction gr_function_from_json(const Json& j, const PosetPtr& p);
Json gr_function_to_json(const GrFunction& f);

// {"field": {...}, "dims": {"a": 2, ...}, "maps": {"a<b": [[...]], ...}}.
// The poset is, in order of preference: `known`, an embedded "poset" object,
// or the elements of "dims" related by the keys of "maps" (which must then be
// covering relations). Covers with no entry in "maps" get zero maps. Throws
// ParseError (naming the element or cover), FunctorialityError, CycleError.
PosetModule module_from_json(const Json& j, const PosetPtr& known = nullptr);
Json module_to_json(const PosetModule& m, bool embed_poset = true);

// {"values": {"a": "x", ...}}
MonotoneMap map_from_json(const Json& j, const PosetPtr& source, const PosetPtr& target);
Json map_to_json(const MonotoneMap& f);

Json integer_to_json(const Integer& v);

}  // namespace mobius::io
