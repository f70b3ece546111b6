#include "harmap/operators.hpp"

#include <cmath>
#include <sstream>

#include "harmap/errors.hpp"
#include "internal.hpp"

namespace harmap {

namespace {

// Points produced as polar(r, t) with r == max_radius may round slightly
// outward; a few ulps of slack keep such grids valid.
constexpr double kRadiusSlack = 1e-14;

void check_radius(Complex z, const Tolerances& tol) {
  if (!(std::abs(z) <= tol.max_radius + kRadiusSlack)) {
    std::ostringstream msg;
    msg << "point " << z << " is beyond the evaluation radius "
        << tol.max_radius;
    throw DomainError(msg.str(), z);
  }
}


// Shared pieces of P_f and its z-derivative, in working precision.
struct Pieces {
  XComplex z;
  XComplex h1, h2, h3;  // h', h'', h'''
  XComplex w, w1, w2;   // w, w', w''
  XReal one_minus_w2;
};

Pieces pieces(const HarmonicMap& f, Complex z, const Tolerances& tol) {
  check_radius(z, tol);
  const XComplex x(z);
  const LocalSeries h = f.h.local_series(x);
  const Series<2> w = detail::dilatation_series(f, x, tol);
  Pieces p{x,
           h.derivative(1),
           h.derivative(2),
           h.derivative(3),
           w.derivative(0),
           w.derivative(1),
           w.derivative(2),
           0.0L};
  p.one_minus_w2 = one_minus_abs2(p.w);
  if (!(p.one_minus_w2 >= tol.min_one_minus_omega2)) {
    std::ostringstream msg;
    msg << "|w(z)| reaches 1 at z = " << z
        << " (1 - |w|^2 = " << static_cast<double>(p.one_minus_w2) << ")";
    throw SingularityError(msg.str(), z);
  }
  return p;
}

XComplex pre_schwarzian_from(const Pieces& p) {
  return p.h2 / p.h1 - std::conj(p.w) * p.w1 / p.one_minus_w2;
}

XComplex schwarzian_from(const Pieces& p, XComplex P) {
  const XComplex log_hp = p.h2 / p.h1;
  const XComplex cw = std::conj(p.w);
  const XComplex cww1 = cw * p.w1;
  const XComplex dP = p.h3 / p.h1 - log_hp * log_hp -
                      (cw * p.w2 / p.one_minus_w2 +
                       cww1 * cww1 / (p.one_minus_w2 * p.one_minus_w2));
  return dP - 0.5L * P * P;
}

XComplex a_from(XComplex z, XComplex P) {
  return 0.5L * one_minus_abs2(z) * P - std::conj(z);
}

}  // namespace

Complex pre_schwarzian(const HarmonicMap& f, Complex z, const Tolerances& tol) {
  return Complex(pre_schwarzian_from(pieces(f, z, tol)));
}

Complex a_operator(const HarmonicMap& f, Complex z, const Tolerances& tol) {
  const Pieces p = pieces(f, z, tol);
  return Complex(a_from(p.z, pre_schwarzian_from(p)));
}

Complex a_operator_analytic(const AnalyticFunction& h, Complex z,
                            const Tolerances& tol) {
  check_radius(z, tol);
  const XComplex x(z);
  const LocalSeries s = h.local_series(x);
  const XComplex h1 = s.derivative(1);
  if (std::abs(h1) < tol.min_abs_hprime)
    throw SingularityError("h'(z) vanishes", z);
  return Complex(a_from(x, s.derivative(2) / h1));
}

Complex schwarzian(const HarmonicMap& f, Complex z, const Tolerances& tol) {
  const Pieces p = pieces(f, z, tol);
  return Complex(schwarzian_from(p, pre_schwarzian_from(p)));
}

OperatorSample evaluate(const HarmonicMap& f, Complex z, bool with_schwarzian,
                        const Tolerances& tol) {
  const Pieces p = pieces(f, z, tol);
  OperatorSample s;
  s.z = z;
  const XComplex P = pre_schwarzian_from(p);
  s.P = Complex(P);
  s.A = Complex(a_from(p.z, P));
  if (with_schwarzian) s.S = Complex(schwarzian_from(p, P));
  s.map_label = f.label;
  return s;
}

WirtingerPair wirtinger_fd(const ComplexField& field, Complex z, double step) {
  if (!(step > 0.0)) throw InvalidParameter("finite-difference step must be > 0");
  if (!(std::abs(z) + step < 1.0))
    throw DomainError("finite-difference stencil leaves the unit disk", z);
  const Complex dx = (field(z + step) - field(z - step)) / (2.0 * step);
  const Complex dy =
      (field(z + kI * step) - field(z - kI * step)) / (2.0 * step);
  return {0.5 * (dx - kI * dy), 0.5 * (dx + kI * dy)};
}

double log_density_gradient_check(const HarmonicMap& f, Complex z,
                                  double step) {
  const Complex A = a_operator(f, z);
  auto log_density = [&f](Complex w) {
    return Complex(std::log(one_minus_abs2(w)) + 0.5 * std::log(jacobian(f, w)),
                   0.0);
  };
  const WirtingerPair d = wirtinger_fd(log_density, z, step);
  return std::abs(A - one_minus_abs2(z) * d.dz);
}

double dilatation_hyperbolic_derivative(const HarmonicMap& f, Complex z,
                                        const Tolerances& tol) {
  const Pieces p = pieces(f, z, tol);
  return static_cast<double>(one_minus_abs2(p.z) * std::abs(p.w1) /
                             p.one_minus_w2);
}

}  // namespace harmap
