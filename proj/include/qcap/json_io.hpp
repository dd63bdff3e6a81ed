// JSON forms for channels, ensembles and optimizer results.
//
// Channel parameters serialize at full round-trip precision; derived report
// quantities are rounded to 9 significant digits first.

#pragma once

#include <json.hpp>

#include "qcap/capacity.hpp"
#include "qcap/shannon.hpp"

namespace qcap {

double round_sig9(double v);

nlohmann::json bloch_to_json(const BlochVector& w);

nlohmann::json channel_to_json(const QubitChannel& ch);

// Accepts either {"lambda": [...], "shift": [...]} or a named family such
// as {"family": "stretched", "mu": 0.5, "s": 0.6}; "mix" nests two channel
// objects under "first" and "second".  With checked = false the map is
// built raw, skipping positivity and complete-positivity validation.
QubitChannel channel_from_json(const nlohmann::json& j, bool checked = true);

nlohmann::json ensemble_to_json(const Ensemble& e);
nlohmann::json capacity_result_to_json(const CapacityResult& r);
nlohmann::json shannon_result_to_json(const ShannonResult& r);

}  // namespace qcap
