#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "harmap/harmonic_map.hpp"
#include "harmap/order.hpp"
#include "harmap/types.hpp"

namespace harmap::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kSingular = 3 };

enum class Format { csv, json };

struct RunConfig {
  nlohmann::json map = {{"catalog", "identity"}};
  GridSpec grid;
  Tolerances tolerances;
  double ode_tol = 1e-8;
  double report_tol = 1e-9;
  std::string out;  // empty: standard output
  Format format = Format::csv;
  std::uint64_t seed = 1;

  /// Throws InvalidParameter when a tolerance is not positive or a grid
  /// count is below 1.
  void validate() const;
};

/// Reads the flat config document. Keys: map (catalog name or descriptor
/// object), params, grid_M, grid_N, grid_K, grid_R, tol, ode_tol,
/// report_tol, seed, out, format, threads, min_abs_hprime,
/// min_one_minus_omega2. Unknown keys are an error.
RunConfig config_from_json(const nlohmann::json& doc);

/// A --map value: a catalog name, an inline JSON descriptor, or a path to a
/// JSON descriptor file.
nlohmann::json map_descriptor(const std::string& value,
                              const std::optional<std::string>& params_json);

/// Shortest decimal that round-trips.
std::string format_double(double v);

int cmd_catalog(const RunConfig& cfg, std::ostream& out);
int cmd_eval(const RunConfig& cfg, const std::vector<Complex>& points,
             std::ostream& out);
int cmd_order(const RunConfig& cfg, OrderKind kind, std::ostream& out);
int cmd_trajectory(const RunConfig& cfg, Complex z0, double t_end,
                   std::optional<double> mu, std::ostream& out);

struct DistortionArgs {
  std::optional<double> alpha;  // default: the map's distortion alpha
  int n_pairs = 10000;
  double r_max = 0.95;
  std::optional<double> ray_theta;  // pairs (0, r e^{i theta}) instead of random
};
int cmd_distortion(const RunConfig& cfg, const DistortionArgs& args,
                   std::ostream& out);

struct CriteriaArgs {
  std::string criterion;  // shc | shc_order_bound | concave_family |
                          // stable_concave | nh | mu_sqrt
  std::optional<double> alpha;
  std::optional<double> lambda;
  int lambda_samples = 64;
};
int cmd_criteria(const RunConfig& cfg, const CriteriaArgs& args,
                 std::ostream& out);

int cmd_grid_export(const RunConfig& cfg, std::ostream& out);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, char** argv);

}  // namespace harmap::cli
