#pragma once

#include <json.hpp>

#include "digsat/connectivity.hpp"
#include "digsat/constructions.hpp"
#include "digsat/detection.hpp"
#include "digsat/formulas.hpp"
#include "digsat/oracle.hpp"
#include "digsat/saturation.hpp"

namespace digsat {

// KTreePlan documents: {"c":2,"n":7,"steps":[{"clique":[0,1],"orientation":"out"},...]}
nlohmann::json plan_to_json(const KTreePlan& plan);
KTreePlan plan_from_json(const nlohmann::json& j);

// Rationals carry the exact fraction plus a decimal rendering.
nlohmann::json rational_to_json(const Rational& r);

nlohmann::json bounds_report_to_json(const BoundsReport& r);
nlohmann::json detection_result_to_json(const DetectionResult& r);
nlohmann::json saturation_report_to_json(const SaturationReport& r);
nlohmann::json scc_to_json(const SccDecomposition& scc);
nlohmann::json oracle_result_to_json(const OracleResult& r);

}  // namespace digsat
