#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmap/analytic_fn.hpp"
#include "harmap/harmonic_map.hpp"
#include "harmap/types.hpp"

namespace harmap {

// Hyperbolic disk with density 1/(1 - |z|^2) and distance
// rho(z, w) = artanh |(z - w)/(1 - conj(w) z)|.

/// Throws DomainError unless |z|, |w| < 1.
double hyperbolic_distance(Complex z, Complex w);
double hyperbolic_density(Complex z);

/// t = (1 - |z|^2) J_f(z)^{1/2}. Throws OrientationError if J_f(z) <= 0.
double level_value(const HarmonicMap& f, Complex z);

struct TrajectoryState {
  double t = 0.0;
  Complex z;
};

enum class Termination { t_span_reached, boundary_proximity, a_near_zero, step_failure };

const char* to_string(Termination reason);

struct Trajectory {
  std::vector<TrajectoryState> states;  // t strictly increasing
  std::string map_label;
  double tol = 0.0;
  double t0 = 0.0;
  double t_end = 0.0;
  bool backward = false;  // integrated toward smaller t
  Termination reason = Termination::t_span_reached;
  int accepted_steps = 0;
  int rejected_steps = 0;
};

struct TrajectoryOptions {
  double boundary_radius = 1.0 - 1e-4;
  double min_abs_a = 1e-8;
  int max_steps = 100000;
};

/// Solves z'(t) = (1 - |z|^2)/(2 t A_f(z)) from t0 = level_value(f, z0) to
/// t_end with an adaptive Dormand-Prince 5(4) stepper, initial step
/// tol^{1/5} t0. Stops early near the boundary or near a zero of A_f.
/// Throws SingularityError if |A_f(z0)| is below options.min_abs_a.
Trajectory integrate_trajectory(const HarmonicMap& f, Complex z0,
                                double t_end, double tol,
                                const TrajectoryOptions& options = {});

/// max over states of |level_value(f, z) - t| / t.
double check_level_consistency(const HarmonicMap& f, const Trajectory& traj);

inline constexpr const char* kTrajectoryCsvHeader = "t,re_z,im_z,level,drift";

struct GrowthBoundReport {
  double mu = 0.0;
  bool pass = true;
  /// min over state pairs i < j of log(l_j / l_i) - 2 mu rho(z_i, z_j), with
  /// l the level recomputed at each state.
  double min_margin = 0.0;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  std::size_t pairs_checked = 0;
};

GrowthBoundReport verify_growth_bound(const HarmonicMap& f,
                                      const Trajectory& traj, double mu,
                                      double tolerance = 1e-7);

struct DistortionRow {
  Complex z0;
  Complex z1;
  double ratio = 0.0;  // (1-|z1|^2) J^{1/2}(z1) / ((1-|z0|^2) J^{1/2}(z0))
  double lo = 0.0;     // exp(-2 alpha rho)
  double hi = 0.0;     // exp(2 alpha rho)
  /// Relative margins log(ratio/lo) and log(hi/ratio).
  double margin_lo = 0.0;
  double margin_hi = 0.0;
  bool pass = true;
  bool equality_lo = false;
  bool equality_hi = false;
};

struct DistortionReport {
  double alpha = 0.0;
  double tolerance = 0.0;
  std::vector<DistortionRow> rows;
  bool pass = true;
  double worst_margin = 0.0;
};

inline constexpr const char* kDistortionCsvHeader =
    "re_z0,im_z0,re_z1,im_z1,ratio,lo,hi,pass";

/// Checks exp(-2 alpha rho) <= ratio <= exp(2 alpha rho) within relative
/// `tolerance`; rows within the tolerance of a bound are flagged as equality.
DistortionReport verify_distortion(
    const HarmonicMap& f, double alpha,
    std::span<const std::pair<Complex, Complex>> pairs,
    double tolerance = 1e-9);

/// (1-r)^{2a-2}/(1+r)^{2a+2} and (1+r)^{2a-2}/(1-r)^{2a+2}.
std::pair<double, double> jacobian_bounds(double alpha, double r);

/// z -> e^{i theta} k_alpha(e^{-i theta} z), the analytic part of the
/// extremal map with constant dilatation omega0.
AnalyticFunction reconstruct_extremal_h(double alpha, double theta,
                                        Complex omega0);

enum class EqualitySide { right, left };

/// Solution of h''/h' = w w'/(1 - w^2) +- 2 u' (alpha +- u)/(1 - u^2),
/// u = e^{-i theta} z, with h(0) = 0 and h'(0) = 1. The value h(z) is a
/// Gauss-Kronrod quadrature of h' along [0, z].
AnalyticFunction reconstruct_extremal_h(double alpha, double theta,
                                        EqualitySide side,
                                        DilatationRule omega);

}  // namespace harmap
