#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmap/harmonic_map.hpp"
#include "harmap/order.hpp"
#include "harmap/types.hpp"

namespace harmap {

/// Result of a sampled check. `pass` iff worst_margin >= -tolerance.
/// `applicable` is false when the check's hypothesis does not hold for the
/// map; the margin is still computed and reported.
struct CriterionReport {
  std::string name;
  std::string grid;  // human-readable grid description
  bool applicable = true;
  std::string note;
  bool pass = true;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  Complex witness_z;
  std::optional<Complex> witness_lambda;
  std::size_t points_checked = 0;
  /// Extra named values (e.g. the |P_f(0)| threshold comparison).
  std::vector<std::pair<std::string, double>> values;
};

/// The n-th roots of unity.
std::vector<Complex> unit_circle(int n = 64);

/// Polar sample of the disk used by the convexity checks.
std::vector<Complex> default_z_grid();

inline constexpr double kCriterionTolerance = 1e-12;

/// min over the product grid of Re{1 + z phi''/phi'}, phi = h + lambda g.
/// A vanishing phi' is a failing witness with margin -infinity.
CriterionReport shc_check(const HarmonicMap& f, std::span<const Complex> z_grid,
                          std::span<const Complex> lambda_grid,
                          double tolerance = kCriterionTolerance);

/// min over z of 1 - |A_f| - (1-|z|^2)|w'|/(2(1-|w|^2)). Applicable when
/// shc_check passes on the same grids.
CriterionReport shc_order_bound_check(const HarmonicMap& f,
                                      std::span<const Complex> z_grid,
                                      std::span<const Complex> lambda_grid,
                                      double tolerance = kCriterionTolerance);

/// min over the product grid of
///   Re{((alpha+1)/2)(1+z)/(1-z) - 1 - z phi''/phi'}.
/// Applicable for 1 <= alpha <= 2.
CriterionReport concave_family_check(const HarmonicMap& f, double alpha,
                                     std::span<const Complex> z_grid,
                                     std::span<const Complex> lambda_grid,
                                     double tolerance = kCriterionTolerance);

/// Lower-order estimate within [1 - 1e-2, 3/2 + 1e-9]. Applicable when the
/// map carries a concavity opening and concave_family_check passes.
CriterionReport stable_concave_mu_bound(const HarmonicMap& f,
                                        const GridSpec& grid = {});

/// Margin lambda - ((1-|z|^2)^2/2)(|S_f| + |w'|^2/(1-|w|^2)^2), the defining
/// inequality multiplied by (1-|z|^2)^2/2. Also reports |P_f(0)| against
/// 2 sqrt(1 - lambda).
CriterionReport nh_lambda_check(const HarmonicMap& f, double lambda,
                                const GridSpec& grid = {});

/// Lower-order estimate >= sqrt(1 - lambda) - 1e-2. Applicable when
/// nh_lambda_check passes and the map is flagged unbounded.
CriterionReport mu_sqrt_bound_check(const HarmonicMap& f, double lambda,
                                    const GridSpec& grid = {});

}  // namespace harmap
