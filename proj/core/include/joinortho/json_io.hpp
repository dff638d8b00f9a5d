#pragma once

#include <json.hpp>

#include "joinortho/classifier.hpp"

namespace joinortho {

// insertion-ordered documents keep the emitted field order stable
using ordered_json = nlohmann::ordered_json;

ordered_json tuple_to_json(const IntTuple& x);
IntTuple tuple_from_json(const nlohmann::json& j);

// {"rows": [[0,1,...],...], "row_sums": [...], "col_sums": [...]}
ordered_json matrix_to_json(const BinaryMatrix& M);
BinaryMatrix matrix_from_rows_json(const nlohmann::json& rows);

// {"mode": "D"|"DTILDE", "r": [...], "V": [[...]], "W": [[...]], "m": [...], "n": [...]}
ordered_json witness_to_json(const WitnessPair& wp);
WitnessPair witness_from_json(const nlohmann::json& j);

// {"psi":..., "weak":..., "strong":..., "delta":...|null, "eps":...|null, "swapped":...}
ordered_json report_to_json(const SuitabilityReport& rep);

// {"m":..., "n":..., "ajo":..., "rule":..., "sjo":..., "witness":...|null, "report":...}
ordered_json verdict_to_json(const Verdict& v);

} // namespace joinortho
