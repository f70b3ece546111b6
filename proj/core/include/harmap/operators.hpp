#pragma once

#include <functional>
#include <optional>
#include <string>

#include "harmap/analytic_fn.hpp"
#include "harmap/harmonic_map.hpp"
#include "harmap/types.hpp"

namespace harmap {

/// P_f, A_f and (optionally) S_f at one point.
///
/// A is formed from the working-precision P before both are rounded, so
/// ((1 - |z|^2)/2) * P - conj(z) reproduces it to a few ulps, not bit for bit.
struct OperatorSample {
  Complex z;
  Complex P;
  Complex A;
  std::optional<Complex> S;
  std::string map_label;
};

/// Pre-Schwarzian P_f = h''/h' - conj(w) w' / (1 - |w|^2).
///
/// Throws DomainError beyond tol.max_radius and SingularityError when
/// |h'| < tol.min_abs_hprime or 1 - |w|^2 < tol.min_one_minus_omega2.
Complex pre_schwarzian(const HarmonicMap& f, Complex z,
                       const Tolerances& tol = kDefaultTolerances);

/// A_f = ((1 - |z|^2)/2) P_f - conj(z). Equals a_operator_analytic(h, z)
/// exactly when g == 0.
Complex a_operator(const HarmonicMap& f, Complex z,
                   const Tolerances& tol = kDefaultTolerances);

/// Pommerenke's operator ((1 - |z|^2)/2) h''/h' - conj(z).
Complex a_operator_analytic(const AnalyticFunction& h, Complex z,
                            const Tolerances& tol = kDefaultTolerances);

/// Harmonic Schwarzian S_f = d/dz P_f - P_f^2/2, with
///   d/dz P_f = (h''' h' - h''^2)/h'^2
///              - [conj(w) w''/(1-|w|^2) + (conj(w) w')^2/(1-|w|^2)^2].
Complex schwarzian(const HarmonicMap& f, Complex z,
                   const Tolerances& tol = kDefaultTolerances);

/// All operators at once; S is included when `with_schwarzian`.
OperatorSample evaluate(const HarmonicMap& f, Complex z,
                        bool with_schwarzian = true,
                        const Tolerances& tol = kDefaultTolerances);

/// Wirtinger derivatives d/dz and d/dzbar.
struct WirtingerPair {
  Complex dz;
  Complex dzbar;
};

using ComplexField = std::function<Complex(Complex)>;

/// Centered-difference Wirtinger derivatives on the 4-point stencil
/// z +- step, z +- i step. Throws DomainError if the stencil leaves the disk.
WirtingerPair wirtinger_fd(const ComplexField& field, Complex z, double step);

/// |A_f(z) - (1 - |z|^2) d/dz log((1 - |z|^2) J_f^{1/2})|, with the
/// derivative taken by wirtinger_fd.
double log_density_gradient_check(const HarmonicMap& f, Complex z,
                                  double step = 1e-5);

/// (1 - |z|^2) |w'| / (1 - |w|^2), the hyperbolic size of the dilatation's
/// derivative. Twice the bound on the subtracted term in A_f.
double dilatation_hyperbolic_derivative(const HarmonicMap& f, Complex z,
                                        const Tolerances& tol = kDefaultTolerances);

}  // namespace harmap
