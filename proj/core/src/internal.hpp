#pragma once

// Working-precision helpers shared between core translation units.

#include "harmap/harmonic_map.hpp"
#include "harmap/series.hpp"

namespace harmap::detail {

/// Local series of w = g'/h' through w''. Throws SingularityError when
/// |h'(z)| < tol.min_abs_hprime.
Series<2> dilatation_series(const HarmonicMap& f, XComplex z,
                            const Tolerances& tol);

XReal jacobian(const HarmonicMap& f, XComplex z);

}  // namespace harmap::detail
