#pragma once

// JSON forms of the report types and the map descriptor format:
//   {"catalog": "power_map", "params": {"n": 3}}
//   {"taylor": {"h": [[re, im], ...], "g": [[re, im], ...]}, "label": "..."}

#include <nlohmann/json.hpp>

#include "harmap/criteria.hpp"
#include "harmap/geometry.hpp"
#include "harmap/harmonic_map.hpp"
#include "harmap/operators.hpp"
#include "harmap/order.hpp"

namespace harmap {

/// Non-finite values become null.
nlohmann::json number_json(double v);
nlohmann::json complex_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// Keys n, alpha, omega0, beta, rho; complex values as [re, im] or a number.
CatalogParams params_from_json(const nlohmann::json& j);

/// Throws InvalidParameter or RepresentationError on malformed input.
HarmonicMap map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GridSpec& g);
nlohmann::json to_json(const OperatorSample& s);
nlohmann::json to_json(const OrderEstimate& e);
nlohmann::json to_json(const Trajectory& t);
nlohmann::json to_json(const DistortionReport& r);
nlohmann::json to_json(const CriterionReport& r);
nlohmann::json to_json(const CatalogEntry& e);

}  // namespace harmap
