#include "harmap/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "harmap/errors.hpp"
#include "harmap/operators.hpp"
#include "internal.hpp"

namespace harmap {

namespace {

void check_in_disk(Complex z) {
  if (!(std::abs(z) < 1.0))
    throw DomainError("point is not in the open unit disk", z);
}

XReal level_x(const HarmonicMap& f, Complex z) {
  check_in_disk(z);
  const XComplex x(z);
  const XReal J = detail::jacobian(f, x);
  if (!(J > 0.0L)) {
    std::ostringstream msg;
    msg << "J_f(z) = " << static_cast<double>(J) << " <= 0 at z = " << z;
    throw OrientationError(msg.str(), z);
  }
  return one_minus_abs2(x) * std::sqrt(J);
}

XReal hyperbolic_distance_x(Complex z, Complex w) {
  check_in_disk(z);
  check_in_disk(w);
  const XComplex a(z), b(w);
  const XReal p = std::abs(a - b) / std::abs(1.0L - std::conj(b) * a);
  return std::atanh(std::min(p, 1.0L));
}

// Local error measured in the hyperbolic metric, so that the level
// (1 - |z|^2) J^{1/2} keeps its relative accuracy near the boundary.
struct HyperbolicErrorChecker {
  using value_type = double;
  using algebra_type = boost::numeric::odeint::array_algebra;
  using operations_type = boost::numeric::odeint::default_operations;

  double tol = 1e-8;

  template <class State, class Deriv, class Err, class Time>
  double error(algebra_type&, const State& x_old, const Deriv&, Err& x_err,
               Time) const {
    const double r = std::hypot(x_old[0], x_old[1]);
    return std::hypot(x_err[0], x_err[1]) / (tol * (1.0 - r) * (1.0 + r));
  }
};

}  // namespace

double hyperbolic_distance(Complex z, Complex w) {
  return static_cast<double>(hyperbolic_distance_x(z, w));
}

double hyperbolic_density(Complex z) {
  check_in_disk(z);
  return 1.0 / one_minus_abs2(z);
}

double level_value(const HarmonicMap& f, Complex z) {
  return static_cast<double>(level_x(f, z));
}

const char* to_string(Termination reason) {
  switch (reason) {
    case Termination::t_span_reached: return "t_span_reached";
    case Termination::boundary_proximity: return "boundary_proximity";
    case Termination::a_near_zero: return "a_near_zero";
    case Termination::step_failure: return "step_failure";
  }
  return "unknown";
}

Trajectory integrate_trajectory(const HarmonicMap& f, Complex z0, double t_end,
                                double tol, const TrajectoryOptions& options) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 2>;

  if (!(tol > 0.0)) throw InvalidParameter("trajectory tolerance must be > 0");
  if (!(t_end > 0.0)) throw InvalidParameter("t_end must be > 0");
  const double t0 = level_value(f, z0);
  if (std::abs(a_operator(f, z0)) < options.min_abs_a)
    throw SingularityError("A_f(z0) vanishes; the trajectory is undefined", z0);

  Trajectory traj;
  traj.map_label = f.label;
  traj.tol = tol;
  traj.t0 = t0;
  traj.t_end = t_end;
  traj.backward = t_end < t0;
  traj.states.push_back({t0, z0});

  auto field = [&f](const State& x, State& dxdt, double t) {
    const Complex z(x[0], x[1]);
    const Complex v = one_minus_abs2(z) / (2.0 * t * a_operator(f, z));
    dxdt = {v.real(), v.imag()};
  };

  using Stepper = ode::runge_kutta_dopri5<State>;
  ode::controlled_runge_kutta<Stepper, HyperbolicErrorChecker> stepper(
      HyperbolicErrorChecker{tol});
  const double dir = traj.backward ? -1.0 : 1.0;
  State x{z0.real(), z0.imag()};
  double t = t0;
  double dt = dir * std::pow(tol, 0.2) * t0;
  const double eps = 4.0 * std::numeric_limits<double>::epsilon();

  while ((t_end - t) * dir > eps * t_end) {
    if (traj.accepted_steps + traj.rejected_steps >= options.max_steps) {
      traj.reason = Termination::step_failure;
      break;
    }
    const bool last = (t + dt - t_end) * dir >= 0.0;
    if (last) dt = t_end - t;
    ode::controlled_step_result res;
    try {
      res = stepper.try_step(field, x, t, dt);
    } catch (const Error&) {
      // A stage point left the evaluation region or hit a singularity.
      stepper.reset();
      dt *= 0.5;
      res = ode::fail;
    }
    if (res == ode::fail) {
      ++traj.rejected_steps;
      if (std::abs(dt) < eps * t) {
        traj.reason = std::hypot(x[0], x[1]) > options.boundary_radius - 1e-3
                          ? Termination::boundary_proximity
                          : Termination::step_failure;
        break;
      }
      continue;
    }
    ++traj.accepted_steps;
    if (last || std::abs(t_end - t) <= eps * t_end) t = t_end;
    const Complex z(x[0], x[1]);
    traj.states.push_back({t, z});
    if (std::abs(z) > options.boundary_radius) {
      traj.reason = Termination::boundary_proximity;
      break;
    }
    if (std::abs(a_operator(f, z)) < options.min_abs_a) {
      traj.reason = Termination::a_near_zero;
      break;
    }
  }
  if (traj.backward) std::reverse(traj.states.begin(), traj.states.end());
  return traj;
}

double check_level_consistency(const HarmonicMap& f, const Trajectory& traj) {
  XReal worst = 0.0L;
  for (const auto& s : traj.states) {
    const XReal t = s.t;
    worst = std::max(worst, std::abs(level_x(f, s.z) - t) / t);
  }
  return static_cast<double>(worst);
}

GrowthBoundReport verify_growth_bound(const HarmonicMap& f,
                                      const Trajectory& traj, double mu,
                                      double tolerance) {
  GrowthBoundReport rep;
  rep.mu = mu;
  const std::size_t n = traj.states.size();
  std::vector<XReal> log_level(n);
  for (std::size_t i = 0; i < n; ++i)
    log_level[i] = std::log(level_x(f, traj.states[i].z));
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const XReal rho =
          hyperbolic_distance_x(traj.states[i].z, traj.states[j].z);
      const double margin = static_cast<double>(log_level[j] - log_level[i] -
                                                2.0L * mu * rho);
      ++rep.pairs_checked;
      if (first || margin < rep.min_margin) {
        rep.min_margin = margin;
        rep.worst_i = i;
        rep.worst_j = j;
        first = false;
      }
    }
  }
  rep.pass = rep.min_margin >= -tolerance;
  return rep;
}

DistortionReport verify_distortion(
    const HarmonicMap& f, double alpha,
    std::span<const std::pair<Complex, Complex>> pairs, double tolerance) {
  if (!(alpha >= 0.0)) throw InvalidParameter("alpha must be >= 0");
  DistortionReport rep;
  rep.alpha = alpha;
  rep.tolerance = tolerance;
  rep.rows.reserve(pairs.size());
  bool first = true;
  for (const auto& [z0, z1] : pairs) {
    DistortionRow row;
    row.z0 = z0;
    row.z1 = z1;
    const XReal log_ratio = std::log(level_x(f, z1)) - std::log(level_x(f, z0));
    const XReal bound = 2.0L * alpha * hyperbolic_distance_x(z0, z1);
    row.ratio = static_cast<double>(std::exp(log_ratio));
    row.lo = static_cast<double>(std::exp(-bound));
    row.hi = static_cast<double>(std::exp(bound));
    row.margin_lo = static_cast<double>(log_ratio + bound);
    row.margin_hi = static_cast<double>(bound - log_ratio);
    row.pass = row.margin_lo >= -tolerance && row.margin_hi >= -tolerance;
    row.equality_lo = std::abs(row.margin_lo) <= tolerance;
    row.equality_hi = std::abs(row.margin_hi) <= tolerance;
    const double worst = std::min(row.margin_lo, row.margin_hi);
    if (first || worst < rep.worst_margin) rep.worst_margin = worst;
    first = false;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

std::pair<double, double> jacobian_bounds(double alpha, double r) {
  if (!(alpha >= 0.0)) throw InvalidParameter("alpha must be >= 0");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1)", r);
  const double lo = std::pow(1.0 - r, 2 * alpha - 2) / std::pow(1.0 + r, 2 * alpha + 2);
  const double hi = std::pow(1.0 + r, 2 * alpha - 2) / std::pow(1.0 - r, 2 * alpha + 2);
  return {lo, hi};
}

AnalyticFunction reconstruct_extremal_h(double alpha, double theta,
                                        Complex omega0) {
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be > 0");
  if (!(std::abs(omega0) < 1.0)) throw InvalidParameter("|omega0| must be < 1");
  const XComplex rot = std::polar(1.0L, static_cast<XReal>(theta));
  const AnalyticFunction k = k_alpha_function(alpha);
  const AnalyticFunction inner = compose(
      k, [rot](XComplex z) { return std::conj(rot) * LocalSeries::variable(z); });
  std::ostringstream label;
  label << "k_" << alpha << "," << theta;
  return linear_combination(rot, inner, 0.0L, zero_function(), 0.0L, label.str());
}

AnalyticFunction reconstruct_extremal_h(double alpha, double theta,
                                        EqualitySide side,
                                        DilatationRule omega) {
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be > 0");
  if (!omega) throw InvalidParameter("dilatation rule is empty");
  using W = Series<2>;
  // The left-side equation is the right-side one rotated by pi.
  const XReal phase =
      theta + (side == EqualitySide::left ? std::numbers::pi_v<XReal> : 0.0L);
  const XComplex rot = std::polar(1.0L, -phase);
  const XComplex w0 = omega(0.0L).value();
  const XComplex c0 = std::sqrt(1.0L - w0 * w0);
  const XReal a = alpha;

  // h' = sqrt(1 - w(0)^2) (1 - w^2)^{-1/2} k_alpha'(u), u = e^{-i phase} z.
  auto hprime = [=](XComplex z) {
    const W u = rot * W::variable(z);
    const W w = omega(z);
    const W kp = pow(1.0L + u, XComplex(a - 1.0L)) * pow(1.0L - u, XComplex(-a - 1.0L));
    return c0 * (pow(1.0L - w * w, XComplex(-0.5L)) * kp);
  };
  auto rule = [=](XComplex z) {
    using boost::math::quadrature::gauss_kronrod;
    const W d = hprime(z);
    auto integrand = [&](XReal s) { return hprime(s * z).value(); };
    const XComplex integral =
        gauss_kronrod<XReal, 31>::integrate(integrand, 0.0L, 1.0L, 15, 1e-17L);
    LocalSeries out;
    out.c[0] = z * integral;
    out.c[1] = d.c[0];
    out.c[2] = d.c[1] * 0.5L;
    out.c[3] = d.c[2] * (1.0L / 3.0L);
    return out;
  };
  std::ostringstream label;
  label << "h_" << (side == EqualitySide::left ? "left" : "right") << "("
        << alpha << "," << theta << ")";
  return AnalyticFunction::closed_form(label.str(), rule);
}

}  // namespace harmap
