#include "harmap/harmonic_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "harmap/errors.hpp"
#include "internal.hpp"

namespace harmap {

namespace {

using S = LocalSeries;

S l_series(XComplex z) {
  const S v = S::variable(z);
  return v / (1.0 - v);
}

S k_series(XComplex z) {
  const S v = S::variable(z);
  const S d = 1.0 - v;
  return v / (d * d);
}

using W = Series<2>;

W truncate(const S& s) {
  W w;
  for (std::size_t k = 0; k <= 2; ++k) w.c[k] = s.c[k];
  return w;
}

/// w(u(z)) for a dilatation rule w and inner series u.
W compose_rule(const DilatationRule& w, const W& u) {
  const W o = w(u.value());
  return harmap::compose<2>({o.derivative(0), o.derivative(1), o.derivative(2)},
                            u);
}

/// (w - b)/(1 - conj(b) w), scaled by `rot` first.
DilatationRule mobius_rule(DilatationRule w, XComplex rot, XComplex b) {
  return [=](XComplex z) {
    const W v = rot * w(z);
    return (v - b) / (1.0L - std::conj(b) * v);
  };
}

/// w(z) = c z^n.
DilatationRule monomial_rule(XComplex c, int n) {
  return [=](XComplex z) {
    W p = W::constant(c);
    for (int i = 0; i < n; ++i) p = p * W::variable(z);
    return p;
  };
}

std::string format_complex(Complex c) {
  std::ostringstream os;
  os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

}  // namespace

MapJets jets(const HarmonicMap& f, Complex z) {
  return {f.h.jet(z), f.g.jet(z)};
}

Complex value(const HarmonicMap& f, Complex z) {
  const XComplex x(z);
  return Complex(f.h.local_series(x).value() +
                 std::conj(f.g.local_series(x).value()));
}

namespace detail {

Series<2> dilatation_series(const HarmonicMap& f, XComplex z,
                            const Tolerances& tol) {
  const Series<2> hp = differentiate(f.h.local_series(z));
  if (std::abs(hp.value()) < tol.min_abs_hprime) {
    std::ostringstream msg;
    msg << "h'(z) vanishes at z = " << Complex(z)
        << " (|h'| = " << static_cast<double>(std::abs(hp.value())) << ")";
    throw SingularityError(msg.str(), Complex(z));
  }
  if (f.omega) return f.omega(z);
  return differentiate(f.g.local_series(z)) / hp;
}

XReal jacobian(const HarmonicMap& f, XComplex z) {
  const XComplex hp = f.h.local_series(z).c[1];
  if (f.omega) return std::norm(hp) * one_minus_abs2(f.omega(z).value());
  const XComplex gp = f.g.local_series(z).c[1];
  return std::norm(hp) - std::norm(gp);
}

}  // namespace detail

DilatationJet dilatation_jet(const HarmonicMap& f, Complex z,
                             const Tolerances& tol) {
  const Series<2> w = detail::dilatation_series(f, XComplex(z), tol);
  return {Complex(w.derivative(0)), Complex(w.derivative(1)),
          Complex(w.derivative(2))};
}

Complex dilatation(const HarmonicMap& f, Complex z, const Tolerances& tol) {
  return dilatation_jet(f, z, tol).w;
}

double jacobian(const HarmonicMap& f, Complex z) {
  return static_cast<double>(detail::jacobian(f, XComplex(z)));
}

bool is_sense_preserving_at(const HarmonicMap& f, Complex z) {
  const Jet3 h = f.h.jet(z);
  const Jet3 g = f.g.jet(z);
  return std::abs(h.f1) >= kDefaultTolerances.min_abs_hprime &&
         std::abs(g.f1) < std::abs(h.f1);
}

std::vector<Complex> PolarGrid::points() const {
  if (radial < 1 || angular < 1 || !(r_max > 0.0) || !(r_max < 1.0))
    throw InvalidParameter("polar grid needs radial, angular >= 1 and 0 < r_max < 1");
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(radial) * angular + 1);
  pts.emplace_back(0.0, 0.0);
  for (int i = 1; i <= radial; ++i) {
    const double r = r_max * i / radial;
    for (int j = 0; j < angular; ++j) {
      const double t = 2.0 * std::numbers::pi * j / angular;
      pts.push_back(std::polar(r, t));
    }
  }
  return pts;
}

SensePreservingReport is_sense_preserving_sampled(const HarmonicMap& f,
                                                  const PolarGrid& grid) {
  SensePreservingReport rep;
  rep.min_jacobian = std::numeric_limits<double>::infinity();
  for (Complex z : grid.points()) {
    const Jet3 h = f.h.jet(z);
    const Jet3 g = f.g.jet(z);
    const double J = jacobian(f, z);
    const double w = std::abs(h.f1) > 0.0
                         ? std::abs(g.f1) / std::abs(h.f1)
                         : std::numeric_limits<double>::infinity();
    ++rep.points_checked;
    if (J < rep.min_jacobian) {
      rep.min_jacobian = J;
      rep.min_jacobian_at = z;
    }
    rep.max_abs_dilatation = std::max(rep.max_abs_dilatation, w);
    if (!(J > 0.0)) {
      rep.pass = false;
      if (rep.violations.size() < 16) rep.violations.push_back(z);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

DiskAutomorphism::DiskAutomorphism(Complex a, double theta)
    : a_(a), theta_(theta), rotation_(std::polar(1.0, theta)) {
  if (!(std::abs(a) < 1.0))
    throw InvalidParameter("disk automorphism needs |a| < 1");
}

Complex DiskAutomorphism::operator()(Complex z) const {
  return rotation_ * (z + a_) / (1.0 + std::conj(a_) * z);
}

Complex DiskAutomorphism::derivative(Complex z) const {
  const Complex d = 1.0 + std::conj(a_) * z;
  return rotation_ * (1.0 - std::norm(a_)) / (d * d);
}

LocalSeries DiskAutomorphism::local_series(XComplex z) const {
  const S v = S::variable(z);
  const XComplex a(a_);
  return XComplex(rotation_) * ((v + a) / (1.0L + std::conj(a) * v));
}

void AffineMap::validate() const {
  if (a == Complex{0.0, 0.0} || !(std::abs(b) < std::abs(a)))
    throw InvalidParameter("affine map needs a != 0 and |b| < |a|");
}

HarmonicMap precompose(const HarmonicMap& f, const DiskAutomorphism& sigma) {
  auto inner = [sigma](XComplex z) { return sigma.local_series(z); };
  HarmonicMap out{compose(f.h, inner, f.h.label() + "@sigma"),
                  compose(f.g, inner, f.g.label() + "@sigma"),
                  f.label + "@sigma", f.info};
  if (f.omega)
    out.omega = [w = f.omega, sigma](XComplex z) {
      return compose_rule(w, truncate(sigma.local_series(z)));
    };
  return out;
}

HarmonicMap postcompose_affine(const AffineMap& L, const HarmonicMap& f) {
  L.validate();
  HarmonicMap out{
      linear_combination(L.a, f.h, L.b, f.g, L.c, "L(" + f.h.label() + ")"),
      linear_combination(std::conj(L.a), f.g, std::conj(L.b), f.h, 0.0L,
                         "L(" + f.g.label() + ")"),
      "L@" + f.label, f.info};
  if (f.omega) {
    const XComplex a(L.a), b(L.b);
    out.omega = [w = f.omega, a, b](XComplex z) {
      const W v = w(z);
      return (std::conj(a) * v + std::conj(b)) / (a + b * v);
    };
  }
  return out;
}

KoebeTransformResult koebe_transform(const HarmonicMap& f, Complex a,
                                     const Tolerances& tol) {
  if (!(std::abs(a) < 1.0))
    throw DomainError("Koebe transform base point must lie in the disk", a);
  const XComplex xa(a);
  const S ha = f.h.local_series(xa);
  const S ga = f.g.local_series(xa);
  if (std::abs(ha.c[1]) < tol.min_abs_hprime)
    throw SingularityError("h'(a) vanishes; Koebe transform undefined", a);

  const DiskAutomorphism sigma(a, 0.0);
  const XComplex D = one_minus_abs2(xa) * ha.c[1];
  const XComplex h_a = ha.c[0];
  const XComplex g_a = ga.c[0];
  const AnalyticFunction h = f.h;
  const AnalyticFunction g = f.g;

  // F = H + conj(G) with H = (h(sigma) - h(a))/D and G = (g(sigma) - g(a))/conj(D).
  auto H = [=](XComplex z) {
    const S u = sigma.local_series(z);
    const S o = h.local_series(u.value());
    std::array<XComplex, 4> d{o.derivative(0), o.derivative(1),
                             o.derivative(2), o.derivative(3)};
    return (harmap::compose<3>(d, u) - h_a) * (1.0L / D);
  };
  auto G = [=](XComplex z) {
    const S u = sigma.local_series(z);
    const S o = g.local_series(u.value());
    std::array<XComplex, 4> d{o.derivative(0), o.derivative(1),
                             o.derivative(2), o.derivative(3)};
    return (harmap::compose<3>(d, u) - g_a) * (1.0L / std::conj(D));
  };

  const XComplex B1 = G(0.0L).derivative(1);
  const XReal scale = 1.0L / (1.0L - std::norm(B1));

  auto H0 = [=](XComplex z) {
    return (H(z) - std::conj(B1) * G(z)) * scale;
  };
  auto G0 = [=](XComplex z) { return (G(z) - B1 * H(z)) * scale; };

  KoebeTransformResult res{
      HarmonicMap{AnalyticFunction::closed_form("H0", H0),
                  AnalyticFunction::closed_form("G0", G0),
                  "koebe(" + f.label + ")", f.info},
      Complex(B1), 0.0};
  if (f.omega) {
    // w_F = (w o sigma) D / conj(D), then w_F0 = (w_F - B1)/(1 - conj(B1) w_F).
    const DilatationRule ws = precompose(f, sigma).omega;
    res.F0.omega = mobius_rule(ws, D / std::conj(D), B1);
  }
  res.half_H0pp0 = Complex(H0(0.0L).c[2]);
  return res;
}

// ---------------------------------------------------------------------------
// Catalog

HarmonicMap identity_map() {
  MapInfo info;
  info.lower_order = 0.0;
  info.upper_order = 1.0;
  info.distortion_alpha = 1.0;
  info.shc = true;
  return {identity_function(), zero_function(), "identity", info};
}

HarmonicMap half_plane_L() {
  auto h = AnalyticFunction::closed_form(
      "(l+k)/2", [](XComplex z) { return 0.5 * (l_series(z) + k_series(z)); });
  auto g = AnalyticFunction::closed_form(
      "(l-k)/2", [](XComplex z) { return 0.5 * (l_series(z) - k_series(z)); });
  MapInfo info;
  info.lower_order = 1.5;
  info.upper_order = 1.5;
  info.distortion_alpha = 1.5;
  info.concave_alpha = 2.0;
  info.unbounded = true;
  return {h, g, "half_plane_L", info, monomial_rule(-1.0L, 1)};
}

HarmonicMap harmonic_koebe_K() {
  auto h = AnalyticFunction::closed_form("h_K", [](XComplex z) {
    const S v = S::variable(z);
    const S d = 1.0 - v;
    const S num = v - 0.5 * (v * v) + (1.0L / 6.0L) * (v * v * v);
    return num / (d * d * d);
  });
  auto g = AnalyticFunction::closed_form("g_K", [](XComplex z) {
    const S v = S::variable(z);
    const S d = 1.0 - v;
    const S num = 0.5 * (v * v) + (1.0L / 6.0L) * (v * v * v);
    return num / (d * d * d);
  });
  MapInfo info;
  info.lower_order = 1.5;
  // |A_K| = 5/2 on the whole real axis and never larger.
  info.upper_order = 2.5;
  info.distortion_alpha = 2.5;
  info.unbounded = true;
  return {h, g, "harmonic_koebe_K", info, monomial_rule(1.0L, 1)};
}

HarmonicMap power_map(int n) {
  if (n < 2) throw InvalidParameter("power_map needs an integer n >= 2");
  auto g = AnalyticFunction::closed_form(
      "z^" + std::to_string(n) + "/" + std::to_string(n), [n](XComplex z) {
        const S v = S::variable(z);
        S p = v;
        for (int i = 1; i < n; ++i) p = p * v;
        return p * (1.0L / n);
      });
  MapInfo info;
  info.lower_order = 0.0;
  info.upper_order = 1.5;
  info.distortion_alpha = 1.5;
  return {identity_function(), g, "power_map(" + std::to_string(n) + ")", info,
          monomial_rule(1.0L, n - 1)};
}

HarmonicMap log_example() {
  auto h = AnalyticFunction::closed_form("z/(1-z)", l_series);
  auto g = AnalyticFunction::closed_form("-(z/(1-z)+log(1-z))", [](XComplex z) {
    const S v = S::variable(z);
    return -(l_series(z) + log(1.0 - v));
  });
  MapInfo info;
  info.lower_order = 0.5;
  info.upper_order = 1.5;
  info.distortion_alpha = 1.5;
  info.unbounded = true;
  return {h, g, "log_example", info, monomial_rule(-1.0L, 1)};
}

AnalyticFunction k_alpha_function(double alpha) {
  if (!(alpha > 0.0)) throw InvalidParameter("k_alpha needs alpha > 0");
  std::ostringstream label;
  label << "k_" << alpha;
  return AnalyticFunction::closed_form(label.str(), [alpha](XComplex z) {
    const S v = S::variable(z);
    const S q = (1.0 + v) / (1.0 - v);
    return (pow(q, XComplex(alpha)) - 1.0L) * (1.0L / (2.0L * alpha));
  });
}

HarmonicMap k_alpha(double alpha) {
  MapInfo info;
  if (alpha >= 1.0) {
    info.upper_order = alpha;
    info.distortion_alpha = alpha;
  }
  std::ostringstream label;
  label << "k_alpha(" << alpha << ")";
  return {k_alpha_function(alpha), zero_function(), label.str(), info};
}

HarmonicMap f_alpha(double alpha, Complex omega0) {
  if (!(std::abs(omega0) < 1.0))
    throw InvalidParameter("f_alpha needs |omega0| < 1");
  const AnalyticFunction k = k_alpha_function(alpha);
  HarmonicMap f = k_alpha(alpha);
  f.g = linear_combination(omega0, k, 0.0L, zero_function(), 0.0L,
                           "omega0*k_alpha");
  std::ostringstream label;
  label << "f_alpha(" << alpha << "," << format_complex(omega0) << ")";
  f.label = label.str();
  f.omega = monomial_rule(XComplex(omega0), 0);
  return f;
}

HarmonicMap concave_beta(double beta, Complex rho) {
  if (!(beta > 0.0) || !(beta <= 0.5))
    throw InvalidParameter("concave_beta needs 0 < beta <= 1/2");
  if (!(std::abs(rho) < 1.0))
    throw InvalidParameter("concave_beta needs |rho| < 1");
  const double p = 1.0 + 2.0 * beta;
  auto h = AnalyticFunction::closed_form("h_beta", [p](XComplex z) {
    const S d = 1.0 - S::variable(z);
    return (pow(d, XComplex(-p)) - 1.0L) * (1.0L / p);
  });
  // g' = rho z h' = rho z (1-z)^{-p-1}, integrated with g(0) = 0.
  auto g = AnalyticFunction::closed_form("g_beta", [p, rho](XComplex z) {
    const S d = 1.0 - S::variable(z);
    const XReal q = p;
    const S prim = pow(d, XComplex(-q)) * (1.0L / q) -
                   pow(d, XComplex(1.0L - q)) * (1.0L / (q - 1.0L));
    return XComplex(rho) * (prim - (1.0L / q - 1.0L / (q - 1.0L)));
  });
  MapInfo info;
  info.concave_alpha = p;
  // |A_h| <= p and the dilatation term adds at most 1/2 (Schwarz-Pick).
  info.distortion_alpha = p + 0.5;
  info.unbounded = true;
  std::ostringstream label;
  label << "concave_beta(" << beta << "," << format_complex(rho) << ")";
  return {h, g, label.str(), info, monomial_rule(XComplex(rho), 1)};
}

HarmonicMap catalog(std::string_view name, const CatalogParams& params) {
  if (name == "identity") return identity_map();
  if (name == "half_plane_L") return half_plane_L();
  if (name == "harmonic_koebe_K") return harmonic_koebe_K();
  if (name == "log_example") return log_example();
  if (name == "power_map") return power_map(params.n.value_or(2));
  if (name == "k_alpha") return k_alpha(params.alpha.value_or(1.5));
  if (name == "f_alpha")
    return f_alpha(params.alpha.value_or(1.5), params.omega0.value_or(0.0));
  if (name == "concave_beta")
    return concave_beta(params.beta.value_or(0.25), params.rho.value_or(0.1));
  throw InvalidParameter("unknown catalog map '" + std::string(name) + "'");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"identity", "", "f(z) = z", 0.0, 1.0, "A_f = -conj(z)"},
      {"half_plane_L", "", "(l+k)/2 + conj((l-k)/2), image Re w > -1/2", 1.5,
       1.5, "closed form A_L = (3/2)(1-conj z)/(1-z)"},
      {"harmonic_koebe_K", "", "harmonic Koebe function, dilatation z", 1.5,
       2.5, "quadratic identity for |A_K|; sup on the real axis"},
      {"power_map", "n: integer >= 2 (default 2)", "z + conj(z)^n/n", 0.0,
       1.5, "|A_f| increasing in |z| with limit 3/2"},
      {"log_example", "", "z/(1-z) - conj(z/(1-z) + log(1-z))", 0.5, 1.5,
       "A_f(x) = 1 - x/2 on the real axis; inf approached as x -> 1"},
      {"k_alpha", "alpha: real > 0 (default 1.5)",
       "((1+z)/(1-z))^alpha - 1)/(2 alpha), analytic", std::nullopt,
       std::nullopt, "A = alpha on the real axis; order alpha for alpha >= 1"},
      {"f_alpha", "alpha: real > 0, omega0: |omega0| < 1",
       "k_alpha + conj(omega0 k_alpha)", std::nullopt, std::nullopt,
       "extremal for the Jacobian distortion bounds"},
      {"concave_beta", "beta in (0, 1/2] (default 0.25), rho: |rho| < 1",
       "((1-z)^{-(1+2beta)} - 1)/(1+2beta) with dilatation rho z",
       std::nullopt, std::nullopt,
       "stable concave when |rho| < beta/(1+beta)"},
  };
  return entries;
}

}  // namespace harmap
