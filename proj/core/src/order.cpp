#include "harmap/order.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <thread>

#include "harmap/errors.hpp"
#include "harmap/operators.hpp"

namespace harmap {

void GridSpec::validate() const {
  if (M < 1 || N < 1 || K < 1 || R < 1)
    throw InvalidParameter("grid counts M, N, K, R must be >= 1");
  if (!(refine_tol > 0.0))
    throw InvalidParameter("refinement tolerance must be > 0");
}

double GridSpec::r_max() const {
  return std::min(1.0 - std::ldexp(1.0, -K), kDefaultTolerances.max_radius);
}

std::vector<double> GridSpec::dyadic_radii() const {
  std::vector<double> out;
  const double cap = kDefaultTolerances.max_radius;
  for (int k = 1; k <= K; ++k)
    out.push_back(std::min(1.0 - std::ldexp(1.0, -k), cap));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> GridSpec::radii() const {
  std::vector<double> out = dyadic_radii();
  out.push_back(0.0);
  for (int i = 1; i < M; ++i)
    out.push_back(std::min(static_cast<double>(i) / M, r_max()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* to_string(OrderKind kind) {
  return kind == OrderKind::lower ? "lower" : "upper";
}

int worker_count(int requested) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("HARMAP_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = n * w / workers;
      const std::size_t hi = n * (w + 1) / workers;
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

struct PolarPoint {
  double r;
  double theta;
};

std::vector<PolarPoint> polar_points(const GridSpec& grid) {
  std::vector<PolarPoint> pts;
  const std::vector<double> radii = grid.radii();
  pts.reserve(1 + (radii.size() - 1) * grid.N);
  pts.push_back({0.0, 0.0});
  for (double r : radii) {
    if (r == 0.0) continue;
    for (int j = 0; j < grid.N; ++j)
      pts.push_back({r, 2.0 * std::numbers::pi * j / grid.N});
  }
  return pts;
}

double abs_a(const HarmonicMap& f, double r, double theta) {
  return std::abs(a_operator(f, std::polar(r, theta)));
}

bool better(OrderKind kind, double candidate, double current) {
  return kind == OrderKind::lower ? candidate < current : candidate > current;
}

BoundaryRay fit_ray(const HarmonicMap& f, double theta,
                    std::span<const double> tail) {
  BoundaryRay ray;
  ray.theta = theta;
  const auto profile = radial_profile(f, theta, tail);
  if (profile.size() < 2) {
    ray.limit = profile.empty() ? 0.0 : profile.back().second;
    return ray;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(profile.size());
  for (const auto& [r, v] : profile) {
    const double x = 1.0 - r;
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
  }
  const double det = n * sxx - sx * sx;
  ray.slope = det != 0.0 ? (n * sxy - sx * sy) / det : 0.0;
  ray.limit = (sy - ray.slope * sx) / n;
  for (const auto& [r, v] : profile)
    ray.max_residual = std::max(
        ray.max_residual, std::abs(v - ray.limit - ray.slope * (1.0 - r)));
  return ray;
}

}  // namespace

std::vector<std::pair<double, double>> radial_profile(
    const HarmonicMap& f, double theta, std::span<const double> radii) {
  std::vector<std::pair<double, double>> out;
  out.reserve(radii.size());
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0))
      throw DomainError("radial_profile needs 0 <= r < 1",
                        std::polar(std::abs(r), theta));
    out.emplace_back(r, abs_a(f, r, theta));
  }
  return out;
}

OrderEstimate estimate_order(const HarmonicMap& f, OrderKind kind,
                             const GridSpec& grid) {
  grid.validate();
  const std::vector<PolarPoint> pts = polar_points(grid);
  std::vector<double> values(pts.size());
  const int threads = worker_count(grid.threads);
  parallel_for(pts.size(), threads, [&](std::size_t i) {
    values[i] = abs_a(f, pts[i].r, pts[i].theta);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (better(kind, values[i], values[best])) best = i;

  OrderEstimate est;
  est.kind = kind;
  est.grid = grid;
  est.points_evaluated = pts.size();

  // Coordinate descent in (r, theta) from the best grid point.
  const std::vector<double> radii = grid.radii();
  const double r_max = grid.r_max();
  double r = pts[best].r;
  double theta = pts[best].theta;
  double value = values[best];
  auto it = std::lower_bound(radii.begin(), radii.end(), r);
  double dr = 0.5 / grid.M;
  if (it != radii.begin()) dr = std::min(dr, 0.5 * (r - *(it - 1)));
  if (it + 1 != radii.end()) dr = std::min(dr, 0.5 * (*(it + 1) - r));
  double dtheta = std::numbers::pi / grid.N;
  for (int iter = 0; iter < grid.R; ++iter) {
    const PolarPoint moves[4] = {{std::min(r + dr, r_max), theta},
                                 {std::max(r - dr, 0.0), theta},
                                 {r, theta + dtheta},
                                 {r, theta - dtheta}};
    double best_value = value;
    PolarPoint best_move{r, theta};
    for (const auto& m : moves) {
      const double v = abs_a(f, m.r, m.theta);
      ++est.points_evaluated;
      if (better(kind, v, best_value)) {
        best_value = v;
        best_move = m;
      }
    }
    if (better(kind, best_value, value)) {
      const double gain = std::abs(best_value - value);
      r = best_move.r;
      theta = best_move.theta;
      value = best_value;
      ++est.refinement_steps;
      if (gain < grid.refine_tol) break;
    } else {
      dr *= 0.5;
      dtheta *= 0.5;
      if (dr < 1e-16 && dtheta < 1e-16) break;
    }
  }
  theta = std::remainder(theta, 2.0 * std::numbers::pi);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  est.witness = std::polar(r, theta);
  est.value = std::abs(a_operator(f, est.witness));

  const std::vector<double> dyadic = grid.dyadic_radii();
  const std::size_t take = std::min<std::size_t>(4, dyadic.size());
  const std::span<const double> tail(dyadic.data() + dyadic.size() - take,
                                     take);
  est.boundary_rays.resize(grid.N);
  parallel_for(grid.N, threads, [&](std::size_t j) {
    est.boundary_rays[j] =
        fit_ray(f, 2.0 * std::numbers::pi * j / grid.N, tail);
  });

  est.sampled_semantics =
      kind == OrderKind::lower
          ? "sampled inf of |A_f| over the grid; an upper bound for mu(f)"
          : "sampled sup of |A_f| over the grid; a lower bound for ||A_f||";
  return est;
}

OrderEstimate lower_order(const HarmonicMap& f, const GridSpec& grid) {
  return estimate_order(f, OrderKind::lower, grid);
}

OrderEstimate upper_order(const HarmonicMap& f, const GridSpec& grid) {
  return estimate_order(f, OrderKind::upper, grid);
}

MuCriterionBound mu_criterion_bound(const HarmonicMap& f,
                                    const GridSpec& grid) {
  grid.validate();
  const std::vector<PolarPoint> pts = polar_points(grid);
  std::vector<double> values(pts.size());
  std::vector<Complex> zs(pts.size());
  parallel_for(pts.size(), worker_count(grid.threads), [&](std::size_t i) {
    const Complex z = std::polar(pts[i].r, pts[i].theta);
    const Complex P = pre_schwarzian(f, z);
    zs[i] = z;
    values[i] = 0.5 * one_minus_abs2(z) * std::abs(P - 2.0 / (1.0 - z));
  });
  const auto best = std::max_element(values.begin(), values.end());
  MuCriterionBound out;
  out.lambda_hat = *best;
  out.witness = zs[best - values.begin()];
  out.implied_mu_lower = std::max(0.0, 1.0 - out.lambda_hat);
  out.heuristic = !(out.lambda_hat <= 1.0);
  return out;
}

std::vector<Complex> grid_points(const GridSpec& grid) {
  grid.validate();
  std::vector<Complex> out;
  for (const auto& p : polar_points(grid)) out.push_back(std::polar(p.r, p.theta));
  return out;
}

std::vector<GridSample> sample_grid(const HarmonicMap& f,
                                    const GridSpec& grid) {
  grid.validate();
  const std::vector<PolarPoint> pts = polar_points(grid);
  std::vector<GridSample> out(pts.size());
  parallel_for(pts.size(), worker_count(grid.threads), [&](std::size_t i) {
    GridSample& s = out[i];
    s.r = pts[i].r;
    s.theta = pts[i].theta;
    s.z = std::polar(s.r, s.theta);
    s.A = a_operator(f, s.z);
    s.jacobian = jacobian(f, s.z);
  });
  return out;
}

}  // namespace harmap
