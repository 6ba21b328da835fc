#pragma once

#include <json.hpp>

#include "charvar/kempf_ness.hpp"
#include "charvar/reconstruct.hpp"
#include "charvar/semialgebraic.hpp"

namespace charvar {

using Json = nlohmann::ordered_json;

// Tuple schema:
//   {"family": "SU"|"SL", "n": int, "r": int, "matrices": [[[ [re, im], ... ] row ] matrix ]}
Json to_json(const RepTuple& rho);
Json to_json(const CMat& m);

/// Throws Parse on malformed input and DimensionMismatch on inconsistent
/// shapes. Group validity is not checked here.
RepTuple tuple_from_json(const Json& j);
CMat matrix_from_json(const Json& j, std::size_t n);

/// {"inside": bool, "on_boundary": bool, "margins": {name: value}}
Json to_json(const RegionVerdict& v);

/// {"system": name, "values": {name: number or [re, im]}}
Json to_json(const InvariantRecord& rec);
InvariantRecord record_from_json(const Json& j);

/// Rank-2 or rank-3 SU(2) coordinates from a record or a bare object of
/// named values. Throws Parse if a name is missing.
SU2Rank2Coords rank2_coords_from_json(const Json& j);
SU2Rank3Coords rank3_coords_from_json(const Json& j);

Json to_json(const FlowTrace& trace);

Json complex_json(Complex z);

}  // namespace charvar
