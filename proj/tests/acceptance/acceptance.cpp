// Acceptance checks 1-7. One line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "harmap/criteria.hpp"
#include "harmap/geometry.hpp"
#include "harmap/operators.hpp"
#include "harmap/order.hpp"
#include "support/oracle.hpp"

using namespace harmap;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Check golden_orders() {
  Check c;
  c.detail.precision(15);
  const auto start = std::chrono::steady_clock::now();
  const double L = lower_order(half_plane_L()).value;
  const double K = lower_order(harmonic_koebe_K()).value;
  const double lg = lower_order(log_example()).value;
  c.require(std::abs(L - 1.5) <= 1e-9, "mu(L) = 1.5");
  c.require(K >= 1.5 && K <= 1.51, "mu(K) in [1.5, 1.51]");
  c.require(lg >= 0.499 && lg <= 0.501, "mu(log) in [0.499, 0.501]");
  c.detail << "mu(L)=" << L << " mu(K)=" << K << " mu(log)=" << lg;
  for (int n : {2, 3, 5}) {
    const double u = upper_order(power_map(n)).value;
    c.require(u >= 1.5 - 1e-3 && u <= 1.5, "upper(power_map(" + std::to_string(n) + "))");
    c.detail << " upper(p" << n << ")=" << u;
  }
  const double id = upper_order(identity_map()).value;
  c.require(id >= 1.0 - 1e-3 && id <= 1.0, "upper(identity)");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs <= 60.0, "runtime <= 60 s");
  c.detail << " upper(id)=" << id << " time=" << secs << "s";
  return c;
}

Check operator_identities() {
  Check c;
  std::mt19937_64 rng(1);
  double eL = 0, eK = 0, eLog = 0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z = oracle::random_in_disk(rng, 0.99);
    eL = std::max(eL, std::abs(a_operator(half_plane_L(), z) -
                               1.5 * (1.0 - std::conj(z)) / (1.0 - z)));
    // |(2/3) A_K (1 - z^2)|^2 - |1 - z^2|^2 = (16/9)(1 - |z|^2)^2
    const Complex q = (2.0 / 3.0) * a_operator(harmonic_koebe_K(), z) * (1.0 - z * z);
    const double s = 1.0 - std::norm(z);
    eK = std::max(eK, std::abs(std::norm(q) - std::norm(1.0 - z * z) -
                               (16.0 / 9.0) * s * s));
    const double x = -0.999 + 1.998 * (i + 0.5) / 1000.0;
    eLog = std::max(eLog, std::abs(a_operator(log_example(), x) - (1.0 - 0.5 * x)));
  }
  c.require(eL <= 1e-12, "A_L closed form");
  c.require(eK <= 1e-10, "Koebe quadratic identity");
  c.require(eLog <= 1e-12, "log example on the real axis");
  c.detail << "A_L err=" << eL << " K identity err=" << eK << " log err=" << eLog;
  return c;
}

HarmonicMap random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (pick(rng)) {
    case 0: return identity_map();
    case 1: return half_plane_L();
    case 2: return harmonic_koebe_K();
    case 3: return power_map(2 + int(u(rng) * 4));
    case 4: return log_example();
    case 5: return k_alpha(0.5 + 1.5 * u(rng));
    case 6: return f_alpha(1.0 + u(rng), oracle::random_in_disk(rng, 0.8));
    default: return concave_beta(0.05 + 0.45 * u(rng), oracle::random_in_disk(rng, 0.5));
  }
}

Check invariance() {
  Check c;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double eAff = 0, eAut = 0, eKoebe = 0;
  for (int i = 0; i < 100; ++i) {
    const HarmonicMap f = random_map(rng);
    const Complex a = std::polar(0.5 + 2.0 * u(rng), 6.283 * u(rng));
    const AffineMap L{a, a * 0.95 * oracle::random_in_disk(rng, 1.0),
                      oracle::random_in_disk(rng, 3.0)};
    const Complex z = oracle::random_in_disk(rng, 0.9);
    eAff = std::max(eAff, std::abs(a_operator(postcompose_affine(L, f), z) -
                                   a_operator(f, z)));
  }
  for (int i = 0; i < 100; ++i) {
    const HarmonicMap f = random_map(rng);
    const DiskAutomorphism s(oracle::random_in_disk(rng, 0.7), 6.283 * u(rng));
    const Complex z = oracle::random_in_disk(rng, 0.7);
    const Complex d = s.derivative(z);
    eAut = std::max(eAut, std::abs(a_operator(precompose(f, s), z) -
                                   d / std::abs(d) * a_operator(f, s(z))));
  }
  for (int i = 0; i < 50; ++i) {
    const HarmonicMap f = random_map(rng);
    const Complex a = oracle::random_in_disk(rng, 0.9);
    eKoebe = std::max(eKoebe,
                      std::abs(koebe_transform(f, a).half_H0pp0 - a_operator(f, a)));
  }
  c.require(eAff <= 1e-10, "affine invariance");
  c.require(eAut <= 1e-9, "automorphism covariance");
  c.require(eKoebe <= 1e-8, "Koebe transform coefficient");
  c.detail << "affine err=" << eAff << " automorphism err=" << eAut
           << " Koebe transform err=" << eKoebe;
  return c;
}

Check differential_oracles() {
  Check c;
  std::mt19937_64 rng(4);
  double eGrad = 0, eS = 0;
  for (const auto& cs : oracle::catalog_cases()) {
    for (int i = 0; i < 200; ++i) {
      const Complex z = oracle::random_in_disk(rng, 0.9);
      const double h = 1e-5;
      auto log_density = [&](Complex w) {
        const double J = std::norm(cs.hp(w)) - std::norm(cs.gp(w));
        return std::log(1.0 - std::norm(w)) + 0.5 * std::log(J);
      };
      const double dx = (log_density(z + h) - log_density(z - h)) / (2 * h);
      const double dy =
          (log_density(z + Complex(0, h)) - log_density(z - Complex(0, h))) / (2 * h);
      const Complex grad = 0.5 * Complex(dx, -dy) * (1.0 - std::norm(z));
      eGrad = std::max(eGrad, std::abs(a_operator(cs.f, z) - grad));
      eGrad = std::max(eGrad, log_density_gradient_check(cs.f, z, h));
    }
    for (int i = 0; i < 50; ++i) {
      const Complex z = oracle::random_in_disk(rng, 0.8);
      const double h = 1e-5;
      auto P = [&](Complex w) { return oracle::operators(cs, w).P; };
      const Complex dx = (P(z + h) - P(z - h)) / (2 * h);
      const Complex dy = (P(z + Complex(0, h)) - P(z - Complex(0, h))) / (2 * h);
      const Complex Pz = P(z);
      const Complex fd = 0.5 * (dx - Complex(0, 1) * dy) - 0.5 * Pz * Pz;
      eS = std::max(eS, std::abs(schwarzian(cs.f, z) - fd));
    }
  }
  c.require(eGrad <= 1e-6, "log-density gradient residual");
  c.require(eS <= 1e-4, "Schwarzian vs finite differences");
  c.detail << "gradient residual=" << eGrad << " Schwarzian err=" << eS;
  return c;
}

Check distortion() {
  Check c;
  std::mt19937_64 rng(5);
  int maps = 0;
  double worst = INFINITY;
  for (const auto& cs : oracle::catalog_cases()) {
    std::vector<std::pair<Complex, Complex>> pairs;
    for (int i = 0; i < 10000; ++i) {
      const Complex z0 = oracle::random_in_disk(rng, 0.95);
      pairs.emplace_back(z0, oracle::random_in_disk(rng, 0.95));
    }
    const DistortionReport r = verify_distortion(cs.f, cs.alpha, pairs);
    c.require(r.pass, "distortion on " + cs.name);
    worst = std::min(worst, r.worst_margin);
    ++maps;
  }
  std::vector<std::pair<Complex, Complex>> right, left;
  for (int k = 1; k <= 99; ++k) {
    right.emplace_back(0.0, 0.01 * k);
    left.emplace_back(0.0, -0.01 * k);
  }
  double eqR = 0, eqL = 0;
  const DistortionReport rf = verify_distortion(f_alpha(1.5, 0.2), 1.5, right);
  for (const auto& row : rf.rows) {
    eqR = std::max(eqR, std::abs(row.ratio / row.hi - 1.0));
    c.require(row.equality_hi, "f_alpha right equality flag");
  }
  const DistortionReport rl = verify_distortion(half_plane_L(), 1.5, left);
  for (const auto& row : rl.rows) {
    eqL = std::max(eqL, std::abs(row.ratio / row.lo - 1.0));
    c.require(row.equality_lo, "L left equality flag");
  }
  c.require(eqR <= 1e-9 && eqL <= 1e-9, "equality to relative 1e-9");
  const auto [lo, hi] = jacobian_bounds(1.5, 0.5);
  const double jr = jacobian(f_alpha(1.5, 0.2), 0.5) / jacobian(f_alpha(1.5, 0.2), 0.0);
  const double jl = jacobian(half_plane_L(), -0.5) / jacobian(half_plane_L(), 0.0);
  const double eB = std::max({std::abs(hi - 48.0), std::abs(lo - 0.5 / std::pow(1.5, 5)),
                              std::abs(jr - hi), std::abs(jl - lo)});
  c.require(eB <= 1e-10, "jacobian_bounds(3/2, 0.5)");
  c.detail << maps << " maps x 10000 pairs, worst margin=" << worst
           << "; equality err right=" << eqR << " left=" << eqL
           << "; jacobian bounds err=" << eB;
  return c;
}

Check trajectories() {
  Check c;
  const double tol = 1e-8;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> scale(-2.0, 2.0);
  double drift = 0;
  int count = 0;
  for (const auto& cs : oracle::catalog_cases()) {
    for (int i = 0; i < 5; ++i) {
      const Complex z0 = oracle::random_in_disk(rng, 0.8);
      if (std::abs(a_operator(cs.f, z0)) < 1e-3) continue;
      const double t_end = level_value(cs.f, z0) * std::exp(scale(rng));
      drift = std::max(drift,
                       check_level_consistency(cs.f, integrate_trajectory(cs.f, z0, t_end, tol)));
      ++count;
    }
  }
  c.require(drift <= 100 * tol, "level drift <= 100 tol");

  const Trajectory id = integrate_trajectory(identity_map(), 0.5, 0.96, tol);
  double eId = 0;
  for (const auto& s : id.states)
    eId = std::max({eId, std::abs(s.t - (1.0 - s.z.real() * s.z.real())),
                    std::abs(s.z.imag())});
  eId = std::max(eId, std::abs(id.states.back().z - 0.2));
  c.require(eId <= 1e-6, "identity first integral");

  const HarmonicMap L = half_plane_L();
  double growth = INFINITY;
  for (int i = 0; i < 20; ++i) {
    const Complex z0 = oracle::random_in_disk(rng, 0.8);
    const double t_end = level_value(L, z0) * std::exp(scale(rng));
    const Trajectory tr = integrate_trajectory(L, z0, t_end, tol);
    c.require(check_level_consistency(L, tr) <= 100 * tol, "L drift");
    growth = std::min(growth, verify_growth_bound(L, tr, 1.5).min_margin);
  }
  c.require(growth >= -1e-7, "growth bound on L with mu = 1.5");
  c.detail << count << " trajectories, max drift=" << drift
           << "; identity err=" << eId << "; L growth margin=" << growth;
  return c;
}

Check criteria_coherence() {
  Check c;
  const auto z = default_z_grid();
  const auto lam = unit_circle();
  const CriterionReport p2 = shc_check(power_map(2), z, lam);
  const CriterionReport k = shc_check(harmonic_koebe_K(), z, lam);
  c.require(!p2.pass, "shc fails on power_map(2)");
  c.require(!k.pass, "shc fails on a map with dilatation z");
  c.detail << "shc margin power_map(2)=" << p2.worst_margin << " K=" << k.worst_margin;

  const HarmonicMap candidates[] = {
      identity_map(), k_alpha(1.0),
      postcompose_affine(AffineMap{1.0, 0.5, 0.0}, identity_map()),
      f_alpha(1.0, Complex(0.3, 0.1)), half_plane_L(), power_map(3),
      log_example(), k_alpha(1.5)};
  int shc_maps = 0;
  double worst_upper = 0;
  for (const auto& f : candidates) {
    if (!shc_check(f, z, lam).pass) continue;
    ++shc_maps;
    const double u = upper_order(f).value;
    worst_upper = std::max(worst_upper, u);
    c.require(u <= 1.0 + 1e-2, "SHC implies upper order <= 1 for " + f.label);
  }
  c.require(shc_maps >= 3, "at least three SHC maps sampled");
  c.detail << "; " << shc_maps << " SHC maps, max upper order=" << worst_upper;

  const CriterionReport nh = nh_lambda_check(k_alpha(1.0), 0.5, GridSpec{});
  double p0 = 0, thr = 0, met = -1;
  for (const auto& [key, v] : nh.values) {
    if (key == "abs_P0") p0 = v;
    if (key == "threshold") thr = v;
    if (key == "bounded_hypothesis_met") met = v;
  }
  c.require(nh.pass, "Mobius map is in NH_0.5");
  c.require(std::abs(p0 - 2.0) <= 1e-12 && std::abs(thr - std::sqrt(2.0)) <= 1e-12 &&
                met == 0.0,
            "|P_f(0)| = 2 vs 2 sqrt(1 - 0.5)");
  c.detail << "; Mobius |P(0)|=" << p0 << " threshold=" << thr;
  return c;
}

}  // namespace

int main() {
  using Fn = Check (*)();
  const std::pair<const char*, Fn> criteria[] = {
      {"golden orders", golden_orders},
      {"closed-form operator identities", operator_identities},
      {"invariance suite", invariance},
      {"differential-geometry oracles", differential_oracles},
      {"distortion bounds", distortion},
      {"trajectory machinery", trajectories},
      {"criteria coherence", criteria_coherence},
  };
  int failed = 0;
  int i = 1;
  for (const auto& [name, fn] : criteria) {
    Check c = fn();
    std::printf("criterion %d (%s): %s  %s\n", i++, name, c.ok ? "PASS" : "FAIL",
                c.detail.str().c_str());
    std::fflush(stdout);
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
