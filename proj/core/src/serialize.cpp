#include "harmap/serialize.hpp"

#include <cmath>

#include "harmap/errors.hpp"

namespace harmap {

using nlohmann::json;

json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json complex_json(Complex z) {
  return json::array({number_json(z.real()), number_json(z.imag())});
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InvalidParameter("complex value must be a number or [re, im], got " +
                         j.dump());
}

CatalogParams params_from_json(const json& j) {
  CatalogParams p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw InvalidParameter("params must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      if (!v.is_number_integer()) throw InvalidParameter("n must be an integer");
      p.n = v.get<int>();
    } else if (key == "alpha") {
      if (!v.is_number()) throw InvalidParameter("alpha must be a number");
      p.alpha = v.get<double>();
    } else if (key == "beta") {
      if (!v.is_number()) throw InvalidParameter("beta must be a number");
      p.beta = v.get<double>();
    } else if (key == "omega0") {
      p.omega0 = complex_from_json(v);
    } else if (key == "rho") {
      p.rho = complex_from_json(v);
    } else {
      throw InvalidParameter("unknown parameter '" + key + "'");
    }
  }
  return p;
}

namespace {

std::vector<Complex> coeffs_from_json(const json& j, const char* which) {
  if (!j.is_array())
    throw RepresentationError(std::string("taylor.") + which +
                              " must be an array of coefficients");
  std::vector<Complex> out;
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

}  // namespace

HarmonicMap map_from_json(const json& j) {
  if (!j.is_object()) throw InvalidParameter("map descriptor must be an object");
  if (j.contains("catalog")) {
    const json params = j.value("params", json());
    return catalog(j.at("catalog").get<std::string>(), params_from_json(params));
  }
  if (j.contains("taylor")) {
    const json& t = j.at("taylor");
    if (!t.is_object() || !t.contains("h"))
      throw RepresentationError("taylor descriptor needs an 'h' array");
    const std::string label = j.value("label", std::string("taylor"));
    HarmonicMap f{AnalyticFunction::taylor(coeffs_from_json(t.at("h"), "h"),
                                           label + ".h"),
                  t.contains("g") ? AnalyticFunction::taylor(
                                        coeffs_from_json(t.at("g"), "g"),
                                        label + ".g")
                                  : zero_function(),
                  label,
                  {}};
    if (j.contains("unbounded")) f.info.unbounded = j.at("unbounded").get<bool>();
    return f;
  }
  throw InvalidParameter("map descriptor needs a 'catalog' or 'taylor' key");
}

json to_json(const GridSpec& g) {
  return {{"M", g.M}, {"N", g.N}, {"K", g.K}, {"R", g.R},
          {"refine_tol", g.refine_tol}, {"r_max", g.r_max()}};
}

json to_json(const OperatorSample& s) {
  json j{{"z", complex_json(s.z)},
         {"P", complex_json(s.P)},
         {"A", complex_json(s.A)},
         {"abs_A", number_json(std::abs(s.A))},
         {"map", s.map_label}};
  j["S"] = s.S ? complex_json(*s.S) : json(nullptr);
  return j;
}

json to_json(const OrderEstimate& e) {
  json rays = json::array();
  for (const auto& r : e.boundary_rays)
    rays.push_back({{"theta", r.theta},
                    {"limit", number_json(r.limit)},
                    {"slope", number_json(r.slope)},
                    {"max_residual", number_json(r.max_residual)}});
  return {{"kind", to_string(e.kind)},
          {"value", number_json(e.value)},
          {"witness", complex_json(e.witness)},
          {"sampled_semantics", e.sampled_semantics},
          {"grid", to_json(e.grid)},
          {"points_evaluated", e.points_evaluated},
          {"refinement_steps", e.refinement_steps},
          {"boundary_rays", rays}};
}

json to_json(const Trajectory& t) {
  json states = json::array();
  for (const auto& s : t.states)
    states.push_back({{"t", s.t}, {"z", complex_json(s.z)}});
  return {{"map", t.map_label},
          {"tol", t.tol},
          {"t0", t.t0},
          {"t_end", t.t_end},
          {"backward", t.backward},
          {"termination", to_string(t.reason)},
          {"accepted_steps", t.accepted_steps},
          {"rejected_steps", t.rejected_steps},
          {"states", states}};
}

json to_json(const DistortionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"z0", complex_json(row.z0)},
                    {"z1", complex_json(row.z1)},
                    {"ratio", number_json(row.ratio)},
                    {"lo", number_json(row.lo)},
                    {"hi", number_json(row.hi)},
                    {"margin_lo", number_json(row.margin_lo)},
                    {"margin_hi", number_json(row.margin_hi)},
                    {"pass", row.pass},
                    {"equality_lo", row.equality_lo},
                    {"equality_hi", row.equality_hi}});
  return {{"alpha", r.alpha},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"worst_margin", number_json(r.worst_margin)},
          {"rows", rows}};
}

json to_json(const CriterionReport& r) {
  json values = json::object();
  for (const auto& [k, v] : r.values) values[k] = number_json(v);
  json witness{{"z", complex_json(r.witness_z)}};
  witness["lambda"] =
      r.witness_lambda ? complex_json(*r.witness_lambda) : json(nullptr);
  return {{"name", r.name},
          {"grid", r.grid},
          {"applicable", r.applicable},
          {"note", r.note},
          {"pass", r.pass},
          {"margin", number_json(r.worst_margin)},
          {"tolerance", r.tolerance},
          {"witness", witness},
          {"points_checked", r.points_checked},
          {"values", values}};
}

json to_json(const CatalogEntry& e) {
  json j{{"name", e.name},
         {"params", e.params},
         {"summary", e.summary},
         {"provenance", e.provenance}};
  j["mu"] = e.lower_order ? json(*e.lower_order) : json(nullptr);
  j["upper"] = e.upper_order ? json(*e.upper_order) : json(nullptr);
  return j;
}

}  // namespace harmap
