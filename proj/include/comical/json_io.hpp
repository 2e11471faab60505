#pragma once

// JSON serialization for cubical and simplicial objects and maps.
//
// Object files:  {"dims": N, "cells": [{"id": string, "dim": n,
//   "marked": bool, "faces": {"i,e": {"op": string, "cell": id}}}]}
// with simplicial faces keyed "j" instead of "i,e".  Operator strings use
// the boxcat word syntax on the cubical side and the image syntax
// "[0 1 3]->4" on the simplicial side.
//
// Map files embed their endpoints:
//   {"src": object, "tgt": object, "assign": {src-id: {"op", "cell"}}}.
//
// Loaders validate the reconstructed object and throw SchemaError naming
// the offending key on malformed input.

#include "comical/cubeset.hpp"
#include "comical/simpset.hpp"

#include "json.hpp"

#include <string>

namespace comical {

nlohmann::json to_json(const MarkedCubicalSet& x);
nlohmann::json to_json(const MarkedSimplicialSet& x);
nlohmann::json to_json(const PresheafMap& f);
nlohmann::json to_json(const SimplicialMap& f);

MarkedCubicalSet cubical_from_json(const nlohmann::json& doc);
MarkedSimplicialSet simplicial_from_json(const nlohmann::json& doc);
PresheafMap cubical_map_from_json(const nlohmann::json& doc);
SimplicialMap simplicial_map_from_json(const nlohmann::json& doc);

// File wrappers; read errors and parse errors become SchemaError with the
// path in the message.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& doc);

} // namespace comical
