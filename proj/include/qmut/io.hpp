#pragma once

#include <json.hpp>

#include "qmut/classify.hpp"
#include "qmut/divergence.hpp"
#include "qmut/exchange.hpp"
#include "qmut/geometry.hpp"

namespace qmut {

nlohmann::json triple_to_json(const ExchangeTriple& b);
ExchangeTriple triple_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const Classification& c);
Classification classification_from_json(const nlohmann::json& j);

/// {strategy, sequence, target, achieved_norm, bounds_guaranteed,
///  steps: [{i, vertex, b12, b23, b13, norm, bound}]}
nlohmann::json certificate_to_json(const DivergenceCertificate& cert);

/// Geometry configs: {"form_tag": "hyperbolic"|"spherical",
///                    "vectors": [[x1,x2,x3], [..], [..]]}
nlohmann::json point_config_to_json(const PointConfig& cfg);
nlohmann::json line_config_to_json(const LineConfig& cfg);
PointConfig point_config_from_json(const nlohmann::json& j);
LineConfig line_config_from_json(const nlohmann::json& j);

}  // namespace qmut
