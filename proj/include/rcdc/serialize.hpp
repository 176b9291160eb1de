#pragma once

#include <json.hpp>

#include "rcdc/constructions.hpp"
#include "rcdc/solver.hpp"
#include "rcdc/verify.hpp"

namespace rcdc {

nlohmann::json to_json(const VerificationReport& report);

// The certificate, when present, is embedded as coloring-file text.
nlohmann::json to_json(const SolveResult& result, const Digraph& d);

nlohmann::json to_json(const PredictedValue& value);

}  // namespace rcdc
