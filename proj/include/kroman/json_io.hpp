#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kroman/labeling.hpp"

namespace kroman {

// Labeling document: {"family","m","n","k","values"} with family in
// {"cylinder","torus"} and values as n rows of m integers. Keys serialize
// alphabetically, so emitted text is byte-stable.
nlohmann::json to_json(const Labeling& lab);

// Inverse of to_json. Malformed documents (missing fields, bad family
// string, wrong shape, labels outside [0, k+1]) raise InputError.
Labeling labeling_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const std::vector<Vertex>& vertices);
nlohmann::json to_json(const std::vector<Violation>& violations);

}  // namespace kroman
