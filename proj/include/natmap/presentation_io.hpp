#pragma once

#include <filesystem>

#include <json.hpp>

#include "natmap/pbw.hpp"

namespace natmap::pbw {

// Presentation file schema:
//
//   {
//     "name": "B",
//     "generators": ["e", "f", "h"],              // PBW order
//     "parameter": {"symbol": "t", "value": null}, // or "p/q"; omit for none
//     "relations": [
//       {"lhs": ["f", "e"], "coeff": "1",
//        "rhs": [{"coeff": "-(t-1)", "word": ["h"]}]},
//       ...
//     ]
//   }
//
// Each relation reads lhs[0]*lhs[1] = coeff * lhs[1]*lhs[0] + sum(rhs), with
// lhs[0] later than lhs[1] in generator order and every rhs word already
// ordered. When "value" is set, coefficients are evaluated there.

/// Throws InvalidPresentation / InputError on schema violations.
PresentationPtr presentation_from_json(const nlohmann::json& j);
PresentationPtr load_presentation(const std::filesystem::path& path);
nlohmann::ordered_json presentation_to_json(const PBWPresentation& p);

}  // namespace natmap::pbw
