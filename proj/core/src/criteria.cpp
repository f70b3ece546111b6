#include "harmap/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "harmap/errors.hpp"
#include "harmap/operators.hpp"

namespace harmap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Worst {
  double margin = std::numeric_limits<double>::infinity();
  Complex z;
  std::optional<Complex> lambda;
};

std::string product_grid(std::size_t nz, std::size_t nl) {
  std::ostringstream os;
  os << nz << " disk points x " << nl << " lambda samples";
  return os.str();
}

std::string grid_text(const GridSpec& g) {
  std::ostringstream os;
  os << "M=" << g.M << " N=" << g.N << " K=" << g.K << " R=" << g.R;
  return os.str();
}

// at_point(z) returns the margin as a function of lambda. Reduction is by
// index order.
template <class Fn>
Worst sweep(std::span<const Complex> z_grid, std::span<const Complex> lambdas,
            Fn at_point) {
  std::vector<Worst> per_z(z_grid.size());
  parallel_for(z_grid.size(), worker_count(), [&](std::size_t i) {
    Worst w;
    w.z = z_grid[i];
    const auto margin = at_point(z_grid[i]);
    for (const Complex lam : lambdas) {
      const double m = margin(lam);
      if (m < w.margin) {
        w.margin = m;
        w.lambda = lam;
      }
    }
    per_z[i] = w;
  });
  Worst out;
  for (const auto& w : per_z)
    if (w.margin < out.margin) out = w;
  return out;
}

// z phi''/phi' for phi = h + lambda g, or nullopt when phi' vanishes.
std::optional<XComplex> log_derivative_term(const LocalSeries& h,
                                            const LocalSeries& g, XComplex z,
                                            Complex lambda) {
  const XComplex lam(lambda);
  const XComplex d1 = h.derivative(1) + lam * g.derivative(1);
  if (std::abs(d1) < kDefaultTolerances.min_abs_hprime) return std::nullopt;
  return z * (h.derivative(2) + lam * g.derivative(2)) / d1;
}

void finish(CriterionReport& rep, const Worst& w) {
  rep.worst_margin = w.margin;
  rep.witness_z = w.z;
  rep.witness_lambda = w.lambda;
  rep.pass = rep.worst_margin >= -rep.tolerance;
}

}  // namespace

std::vector<Complex> unit_circle(int n) {
  if (n < 1) throw InvalidParameter("need at least one lambda sample");
  std::vector<Complex> out;
  for (int k = 0; k < n; ++k)
    out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
  return out;
}

std::vector<Complex> default_z_grid() {
  return PolarGrid{40, 128, 0.999}.points();
}

CriterionReport shc_check(const HarmonicMap& f, std::span<const Complex> z_grid,
                          std::span<const Complex> lambda_grid,
                          double tolerance) {
  CriterionReport rep;
  rep.name = "shc";
  rep.grid = product_grid(z_grid.size(), lambda_grid.size());
  rep.tolerance = tolerance;
  rep.points_checked = z_grid.size() * lambda_grid.size();
  const Worst w = sweep(z_grid, lambda_grid, [&](Complex z) {
    const XComplex x(z);
    return [x, h = f.h.local_series(x), g = f.g.local_series(x)](Complex lam) {
      const auto t = log_derivative_term(h, g, x, lam);
      if (!t) return kNegInf;
      return static_cast<double>(1.0L + t->real());
    };
  });
  finish(rep, w);
  return rep;
}

CriterionReport shc_order_bound_check(const HarmonicMap& f,
                                      std::span<const Complex> z_grid,
                                      std::span<const Complex> lambda_grid,
                                      double tolerance) {
  const CriterionReport pre = shc_check(f, z_grid, lambda_grid);
  CriterionReport rep;
  rep.name = "shc_order_bound";
  rep.grid = product_grid(z_grid.size(), 1);
  rep.tolerance = tolerance;
  rep.points_checked = z_grid.size();
  rep.applicable = pre.pass;
  if (!pre.pass) rep.note = "shc_check fails on the same grids";
  const std::vector<Complex> one{Complex(1.0, 0.0)};
  Worst w = sweep(z_grid, one, [&](Complex z) {
    const double m = 1.0 - std::abs(a_operator(f, z)) -
                     0.5 * dilatation_hyperbolic_derivative(f, z);
    return [m](Complex) { return m; };
  });
  w.lambda.reset();
  finish(rep, w);
  return rep;
}

CriterionReport concave_family_check(const HarmonicMap& f, double alpha,
                                     std::span<const Complex> z_grid,
                                     std::span<const Complex> lambda_grid,
                                     double tolerance) {
  CriterionReport rep;
  rep.name = "concave_family";
  rep.grid = product_grid(z_grid.size(), lambda_grid.size());
  rep.tolerance = tolerance;
  rep.points_checked = z_grid.size() * lambda_grid.size();
  rep.applicable = alpha >= 1.0 && alpha <= 2.0;
  if (!rep.applicable) rep.note = "alpha outside [1, 2]";
  rep.values.emplace_back("alpha", alpha);
  const XReal c = 0.5L * (static_cast<XReal>(alpha) + 1.0L);
  const Worst w = sweep(z_grid, lambda_grid, [&](Complex z) {
    const XComplex x(z);
    const XComplex base = c * (1.0L + x) / (1.0L - x) - 1.0L;
    return [x, base, h = f.h.local_series(x),
            g = f.g.local_series(x)](Complex lam) {
      const auto t = log_derivative_term(h, g, x, lam);
      if (!t) return kNegInf;
      return static_cast<double>((base - *t).real());
    };
  });
  finish(rep, w);
  return rep;
}

CriterionReport stable_concave_mu_bound(const HarmonicMap& f,
                                        const GridSpec& grid) {
  CriterionReport rep;
  rep.name = "stable_concave_mu_bound";
  rep.grid = grid_text(grid);
  rep.tolerance = 0.0;
  if (!f.info.concave_alpha) {
    rep.applicable = false;
    rep.note = "map has no concavity opening; not a concave-family candidate";
  } else {
    const std::vector<Complex> z = default_z_grid();
    const std::vector<Complex> lam = unit_circle();
    const CriterionReport pre =
        concave_family_check(f, *f.info.concave_alpha, z, lam);
    rep.applicable = pre.pass && pre.applicable;
    if (!rep.applicable) rep.note = "concave_family_check fails";
    rep.values.emplace_back("concave_family_margin", pre.worst_margin);
  }
  const OrderEstimate est = lower_order(f, grid);
  rep.points_checked = est.points_evaluated;
  rep.witness_z = est.witness;
  rep.values.emplace_back("mu_estimate", est.value);
  rep.worst_margin = std::min(est.value - (1.0 - 1e-2), (1.5 + 1e-9) - est.value);
  rep.pass = rep.worst_margin >= -rep.tolerance;
  return rep;
}

CriterionReport nh_lambda_check(const HarmonicMap& f, double lambda,
                                const GridSpec& grid) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw InvalidParameter("lambda must lie in (0, 1]");
  CriterionReport rep;
  rep.name = "nh_lambda";
  rep.grid = grid_text(grid);
  rep.tolerance = kCriterionTolerance;
  const std::vector<Complex> pts = grid_points(grid);
  rep.points_checked = pts.size();
  const std::vector<Complex> one{Complex(1.0, 0.0)};
  Worst w = sweep(pts, one, [&](Complex z) {
    const double s = one_minus_abs2(z);
    const double d = dilatation_hyperbolic_derivative(f, z);
    const double m = lambda - 0.5 * (s * s * std::abs(schwarzian(f, z)) + d * d);
    return [m](Complex) { return m; };
  });
  w.lambda.reset();
  finish(rep, w);
  const double p0 = std::abs(pre_schwarzian(f, 0.0));
  const double threshold = 2.0 * std::sqrt(1.0 - lambda);
  rep.values.emplace_back("lambda", lambda);
  rep.values.emplace_back("abs_P0", p0);
  rep.values.emplace_back("threshold", threshold);
  rep.values.emplace_back("bounded_hypothesis_met", p0 < threshold ? 1.0 : 0.0);
  if (!(p0 < threshold))
    rep.note = "|P_f(0)| >= 2 sqrt(1 - lambda): the boundedness hypothesis is not met";
  return rep;
}

CriterionReport mu_sqrt_bound_check(const HarmonicMap& f, double lambda,
                                    const GridSpec& grid) {
  const CriterionReport nh = nh_lambda_check(f, lambda, grid);
  CriterionReport rep;
  rep.name = "mu_sqrt_bound";
  rep.grid = grid_text(grid);
  rep.tolerance = 0.0;
  rep.applicable = nh.pass && f.info.unbounded;
  if (!nh.pass)
    rep.note = "nh_lambda_check fails at this lambda";
  else if (!f.info.unbounded)
    rep.note = "map is not flagged unbounded";
  const OrderEstimate est = lower_order(f, grid);
  const double bound = std::sqrt(1.0 - lambda);
  rep.points_checked = est.points_evaluated;
  rep.witness_z = est.witness;
  rep.values.emplace_back("lambda", lambda);
  rep.values.emplace_back("mu_estimate", est.value);
  rep.values.emplace_back("sqrt_bound", bound);
  rep.values.emplace_back("nh_margin", nh.worst_margin);
  rep.worst_margin = est.value - (bound - 1e-2);
  rep.pass = rep.worst_margin >= -rep.tolerance;
  return rep;
}

}  // namespace harmap
