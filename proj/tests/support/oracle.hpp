#pragma once

// Reference values computed without the library's series arithmetic:
// first derivatives of h and g in closed form, higher derivatives by the
// trapezoid rule on a Cauchy circle.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "harmap/harmonic_map.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Fn = std::function<Complex(Complex)>;

struct Case {
  std::string name;
  harmap::HarmonicMap f;
  Fn hp;  // h'
  Fn gp;  // g'
  double alpha = 0.0;  // distortion alpha, 0 when unknown
};

// n-th derivative of F at z for n = 0, 1, 2.
inline std::vector<Complex> cauchy_derivatives(const Fn& F, Complex z) {
  const double r = std::min(0.25, 0.5 * (1.0 - std::abs(z)));
  const int n = 128;
  std::vector<Complex> d(3, 0.0);
  for (int k = 0; k < n; ++k) {
    const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    const Complex v = F(z + r * u);
    d[0] += v;
    d[1] += v / (r * u);
    d[2] += 2.0 * v / (r * r * u * u);
  }
  for (auto& x : d) x /= double(n);
  return d;
}

struct Jets {
  Complex h1, h2, h3, g1, g2, g3;
};

inline Jets jets(const Case& c, Complex z) {
  const auto h = cauchy_derivatives(c.hp, z);
  const auto g = cauchy_derivatives(c.gp, z);
  return {c.hp(z), h[1], h[2], c.gp(z), g[1], g[2]};
}

struct Ops {
  Complex w, w1, w2, P, A, S;
  double J;
};

inline Ops operators(const Case& c, Complex z) {
  const Jets j = jets(c, z);
  Ops o;
  o.w = j.g1 / j.h1;
  o.w1 = (j.g2 * j.h1 - j.g1 * j.h2) / (j.h1 * j.h1);
  o.w2 = (j.g3 * j.h1 - j.g1 * j.h3) / (j.h1 * j.h1) -
         2.0 * j.h2 * (j.g2 * j.h1 - j.g1 * j.h2) / (j.h1 * j.h1 * j.h1);
  const double s = 1.0 - std::norm(o.w);
  o.J = std::norm(j.h1) - std::norm(j.g1);
  o.P = j.h2 / j.h1 - std::conj(o.w) * o.w1 / s;
  o.A = 0.5 * (1.0 - std::norm(z)) * o.P - std::conj(z);
  const Complex dP = (j.h3 * j.h1 - j.h2 * j.h2) / (j.h1 * j.h1) -
                     (std::conj(o.w) * o.w2 / s +
                      std::pow(std::conj(o.w) * o.w1, 2) / (s * s));
  o.S = dP - 0.5 * o.P * o.P;
  return o;
}

inline Complex kq(double alpha, Complex z) {
  return std::pow((1.0 + z) / (1.0 - z), alpha - 1.0) / ((1.0 - z) * (1.0 - z));
}

inline std::vector<Case> catalog_cases() {
  using namespace harmap;
  std::vector<Case> out;
  out.push_back({"identity", identity_map(), [](Complex) { return Complex(1.0); },
                 [](Complex) { return Complex(0.0); }, 1.0});
  out.push_back({"half_plane_L", half_plane_L(),
                 [](Complex z) { return 1.0 / std::pow(1.0 - z, 3); },
                 [](Complex z) { return -z / std::pow(1.0 - z, 3); }, 1.5});
  out.push_back({"harmonic_koebe_K", harmonic_koebe_K(),
                 [](Complex z) { return (1.0 + z) / std::pow(1.0 - z, 4); },
                 [](Complex z) { return z * (1.0 + z) / std::pow(1.0 - z, 4); },
                 2.5});
  for (int n : {2, 3, 5})
    out.push_back({"power_map(" + std::to_string(n) + ")", power_map(n),
                   [](Complex) { return Complex(1.0); },
                   [n](Complex z) { return std::pow(z, n - 1); }, 1.5});
  out.push_back({"log_example", log_example(),
                 [](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); },
                 [](Complex z) { return -z / ((1.0 - z) * (1.0 - z)); }, 1.5});
  for (double a : {1.0, 1.5})
    out.push_back({"k_alpha(" + std::to_string(a) + ")", k_alpha(a),
                   [a](Complex z) { return kq(a, z); },
                   [](Complex) { return Complex(0.0); }, a});
  const Complex w0(0.3, -0.2);
  out.push_back({"f_alpha(1.5,0.3-0.2i)", f_alpha(1.5, w0),
                 [](Complex z) { return kq(1.5, z); },
                 [w0](Complex z) { return w0 * kq(1.5, z); }, 1.5});
  const Complex rho(0.1, 0.05);
  out.push_back({"concave_beta(0.25,0.1+0.05i)", concave_beta(0.25, rho),
                 [](Complex z) { return std::pow(1.0 - z, -2.5); },
                 [rho](Complex z) { return rho * z * std::pow(1.0 - z, -2.5); },
                 2.0});
  return out;
}

inline Complex random_in_disk(std::mt19937_64& rng, double r_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = r_max * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

}  // namespace oracle
