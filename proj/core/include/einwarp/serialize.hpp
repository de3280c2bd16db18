#pragma once

#include <string>

#include <json.hpp>

#include "einwarp/analysis.hpp"
#include "einwarp/catalog.hpp"
#include "einwarp/solver.hpp"

namespace einwarp {

using json = nlohmann::json;

// Profiles: {"kind": ..., "coeffs": [...], "domain": [lo, hi]}; spline kinds
// embed knot arrays, composite kinds an op plus children.
json profile_to_json(const Profile& p);
Profile profile_from_json(const json& j);

json params_to_json(const Params& p);
Params params_from_json(const json& j);

json base_to_json(const BaseAnsatz& b);
BaseAnsatz base_from_json(const json& j);

json fiber_to_json(const FiberData& f);
FiberData fiber_from_json(const json& j);

json ansatz_to_json(const WarpedAnsatz& a);
WarpedAnsatz ansatz_from_json(const json& j);

json grid_to_json(const GridSpec& g);
GridSpec grid_from_json(const json& j);

json report_to_json(const ResidualReport& r);

json construction_to_json(const ConstructionSpec& s);
ConstructionSpec construction_from_json(const json& j);

json hypotheses_to_json(const RigidityHypotheses& h);
RigidityHypotheses hypotheses_from_json(const json& j);  ///< IncompleteHypotheses on gaps

json verdict_to_json(const RigidityVerdict& v, const RigidityHypotheses& h);

json estimate_to_json(const EstimateResult& r, const EstimateConfig& cfg);

/// Parse a JSON document, mapping library and json exceptions to ParseError.
json parse_json(const std::string& text);

/// CSV with 17 significant digits per value.
std::string estimate_csv(const EstimateResult& r);
std::string residual_csv(const WarpedAnsatz& a, const GridSpec& grid, bool fiber_in_scalar);

}  // namespace einwarp
