#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmap/harmonic_map.hpp"
#include "harmap/types.hpp"

namespace harmap {

/// Polar sampling grid for the order estimates.
///
/// Radii are 0, the uniform radii i/M (i < M) and the dyadic radii
/// 1 - 2^{-k}, k = 1..K; each radius is clamped to Tolerances::max_radius.
struct GridSpec {
  int M = 64;    // uniform radial count
  int N = 256;   // angular count
  int K = 20;    // dyadic depth, r_max = 1 - 2^{-K}
  int R = 40;    // refinement iterations
  double refine_tol = 1e-13;
  int threads = 0;  // 0: hardware concurrency, capped by HARMAP_THREADS

  /// Throws InvalidParameter unless M, N, R, K >= 1 and refine_tol > 0.
  void validate() const;
  double r_max() const;
  /// Sorted, distinct radii (including 0).
  std::vector<double> radii() const;
  /// The dyadic radii alone, sorted, after clamping.
  std::vector<double> dyadic_radii() const;
};

enum class OrderKind { lower, upper };

const char* to_string(OrderKind kind);

/// |A_f| along one ray with a linear fit a + b (1 - r) over the last four
/// dyadic radii; `limit` is a.
struct BoundaryRay {
  double theta = 0.0;
  double limit = 0.0;
  double slope = 0.0;
  double max_residual = 0.0;
};

struct OrderEstimate {
  OrderKind kind = OrderKind::lower;
  double value = 0.0;
  Complex witness;
  std::string sampled_semantics;
  std::vector<BoundaryRay> boundary_rays;
  GridSpec grid;
  std::size_t points_evaluated = 0;
  int refinement_steps = 0;
};

/// Sampled inf |A_f|: an upper bound for the lower order.
OrderEstimate lower_order(const HarmonicMap& f, const GridSpec& grid = {});

/// Sampled sup |A_f|: a lower bound for the upper order.
OrderEstimate upper_order(const HarmonicMap& f, const GridSpec& grid = {});

OrderEstimate estimate_order(const HarmonicMap& f, OrderKind kind,
                             const GridSpec& grid = {});

/// (r, |A_f(r e^{i theta})|) for each radius. Throws DomainError if a
/// radius is negative or not below 1.
std::vector<std::pair<double, double>> radial_profile(
    const HarmonicMap& f, double theta, std::span<const double> radii);

struct MuCriterionBound {
  double lambda_hat = 0.0;        // sampled sup of ((1-|z|^2)/2)|P_f - 2/(1-z)|
  double implied_mu_lower = 0.0;  // max(0, 1 - lambda_hat)
  bool heuristic = true;          // true unless lambda_hat <= 1
  Complex witness;
};

MuCriterionBound mu_criterion_bound(const HarmonicMap& f,
                                    const GridSpec& grid = {});

/// One row of the grid export.
struct GridSample {
  double r = 0.0;
  double theta = 0.0;
  Complex z;
  Complex A;
  double jacobian = 0.0;
};

inline constexpr const char* kGridCsvHeader =
    "r,theta,re_z,im_z,abs_A,re_A,im_A,jacobian";

/// The grid points: the origin first, then radius-major.
std::vector<Complex> grid_points(const GridSpec& grid);

/// Every grid point, in grid_points() order.
std::vector<GridSample> sample_grid(const HarmonicMap& f, const GridSpec& grid);

/// Worker count: `requested` (or hardware concurrency when <= 0), capped by
/// the HARMAP_THREADS environment variable when set.
int worker_count(int requested = 0);

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index runs
/// exactly once; the first exception by index order is rethrown.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace harmap
