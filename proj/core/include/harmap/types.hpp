#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace harmap {

using Complex = std::complex<double>;

/// Working precision for jets and operator evaluation. Near the unit circle
/// 1 - |w|^2 loses about log10(1/(1 - |w|)) digits, so the internals carry a
/// wider mantissa and results are rounded to double at the API boundary.
using XReal = long double;
using XComplex = std::complex<XReal>;

inline constexpr Complex kI{0.0, 1.0};

/// 1 - |z|^2 computed as (1 - |z|)(1 + |z|), which keeps relative accuracy
/// when |z| is close to 1.
inline double one_minus_abs2(Complex z) {
  const double r = std::abs(z);
  return (1.0 - r) * (1.0 + r);
}

inline XReal one_minus_abs2(XComplex z) {
  const XReal r = std::abs(z);
  return (1.0L - r) * (1.0L + r);
}

/// Thresholds shared by the operator evaluations. Fixed defaults; callers
/// may pass their own.
struct Tolerances {
  double min_abs_hprime = 1e-14;      // |h'(z)| below this is singular
  double min_one_minus_omega2 = 1e-12;  // 1 - |w(z)|^2 below this is singular
  double max_radius = 1.0 - 1e-6;     // operators refuse beyond this |z|
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace harmap
