#pragma once

#include <json.hpp>

#include "torusband/gentle.hpp"
#include "torusband/intersections.hpp"
#include "torusband/sequences.hpp"
#include "torusband/twists.hpp"
#include "torusband/verify.hpp"

namespace tb {

// Walk format:   {"n": int, "letters": [{"kind":"eps"|"kappa","col":int,"sign":1|-1}, ...]}
// Matrix format: {"n": int, "r": int, "entries": [int x n*r]}  (row-major)

nlohmann::json to_json(const cyclic_walk& w);
nlohmann::json to_json(const loop_matrix& m);
nlohmann::json to_json(const homology_class& h);
nlohmann::json to_json(const intersection_report& rep);
nlohmann::json to_json(const simplicity_report& rep);
nlohmann::json to_json(const projective_complex& X);
nlohmann::json to_json(const twist_word& word);
nlohmann::json to_json(const verify_report& rep);

cyclic_walk walk_from_json(const nlohmann::json& j);
loop_matrix matrix_from_json(const nlohmann::json& j);

/// True when the JSON value looks like a walk (has a "letters" field).
bool json_is_walk(const nlohmann::json& j);

} // namespace tb
