#pragma once

#include <json.hpp>

#include "bosonic/spherical.hpp"

namespace bosonic {

using Json = nlohmann::ordered_json;

// {"rank": r, "terms": [{"z": [...], "t": e, "c": "<decimal>"} ...]} with
// terms in canonical (lex on z, then t) order.
Json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json half_power_to_json(const HalfPowerValue& value);
Json state_to_json(const SystemSpec& spec, const State& state);

}  // namespace bosonic
