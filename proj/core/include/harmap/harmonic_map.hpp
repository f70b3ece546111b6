#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmap/analytic_fn.hpp"
#include "harmap/types.hpp"

namespace harmap {

/// Known facts about a map, used for golden checks and hypotheses that
/// cannot be decided from samples (e.g. unboundedness).
struct MapInfo {
  std::optional<double> lower_order;   // exact inf |A_f| when known
  std::optional<double> upper_order;   // exact sup |A_f| when known
  std::optional<double> distortion_alpha;  // proven bound >= sup |A_f|
  std::optional<double> concave_alpha;  // opening parameter for concavity checks
  bool unbounded = false;
  bool shc = false;
};

/// Local series of w = g'/h' through w''.
using DilatationRule = std::function<Series<2>(XComplex)>;

/// f = h + conj(g) on the unit disk.
struct HarmonicMap {
  AnalyticFunction h;
  AnalyticFunction g;
  std::string label;
  MapInfo info;
  /// Optional closed form for w. When empty, w is formed as g'/h' from the
  /// jets, which loses accuracy where h' and g' vanish together.
  DilatationRule omega = {};
};

struct MapJets {
  Jet3 h;
  Jet3 g;
};

MapJets jets(const HarmonicMap& f, Complex z);

/// f(z) = h(z) + conj(g(z)).
Complex value(const HarmonicMap& f, Complex z);

/// w, w', w'' for the second complex dilatation w = g'/h'.
struct DilatationJet {
  Complex w, w1, w2;
};

/// Throws SingularityError if |h'(z)| < tol.min_abs_hprime.
DilatationJet dilatation_jet(const HarmonicMap& f, Complex z,
                             const Tolerances& tol = kDefaultTolerances);

Complex dilatation(const HarmonicMap& f, Complex z,
                   const Tolerances& tol = kDefaultTolerances);

/// J_f = |h'|^2 - |g'|^2.
double jacobian(const HarmonicMap& f, Complex z);

/// Point is sense-preserving: h' != 0 and |w| < 1.
bool is_sense_preserving_at(const HarmonicMap& f, Complex z);

/// Polar sample grid: the origin plus `radial` equally spaced radii in
/// (0, r_max] times `angular` equally spaced angles.
struct PolarGrid {
  int radial = 32;
  int angular = 64;
  double r_max = 0.95;

  std::vector<Complex> points() const;
};

struct SensePreservingReport {
  bool pass = true;
  double min_jacobian = 0.0;
  double max_abs_dilatation = 0.0;
  Complex min_jacobian_at;
  /// Points where J_f <= 0 (capped at a handful).
  std::vector<Complex> violations;
  std::size_t points_checked = 0;
};

SensePreservingReport is_sense_preserving_sampled(const HarmonicMap& f,
                                                  const PolarGrid& grid);

/// sigma(z) = e^{i theta} (z + a) / (1 + conj(a) z).
class DiskAutomorphism {
 public:
  /// Throws InvalidParameter unless |a| < 1.
  DiskAutomorphism(Complex a, double theta);

  Complex a() const { return a_; }
  double theta() const { return theta_; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  LocalSeries local_series(XComplex z) const;

 private:
  Complex a_;
  double theta_;
  Complex rotation_;
};

/// L(w) = a w + b conj(w) + c with |b| < |a|.
struct AffineMap {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};

  /// Throws InvalidParameter unless a != 0 and |b| < |a|.
  void validate() const;
  Complex operator()(Complex w) const { return a * w + b * std::conj(w) + c; }
};

/// f∘sigma, with chain-rule jets through order 3.
HarmonicMap precompose(const HarmonicMap& f, const DiskAutomorphism& sigma);

/// L∘f = (a h + b g + c) + conj(conj(a) g + conj(b) h).
HarmonicMap postcompose_affine(const AffineMap& L, const HarmonicMap& f);

struct KoebeTransformResult {
  HarmonicMap F0;     // normalized: H0(0) = 0, H0'(0) = 1, G0'(0) = 0
  Complex B1;         // G'(0) of the intermediate map F
  Complex half_H0pp0;  // H0''(0)/2, which equals A_f(a)
};

/// F(z) = (f((a+z)/(1+conj(a)z)) - f(a)) / ((1-|a|^2) h'(a)),
/// F0 = (F - conj(B1 F)) / (1 - |B1|^2).
KoebeTransformResult koebe_transform(const HarmonicMap& f, Complex a,
                                     const Tolerances& tol = kDefaultTolerances);

// ---------------------------------------------------------------------------
// Catalog

struct CatalogParams {
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<Complex> omega0;
  std::optional<double> beta;
  std::optional<Complex> rho;
};

HarmonicMap identity_map();

/// L = (l + k)/2 + conj((l - k)/2), l = z/(1-z), k = z/(1-z)^2.
/// w_L(z) = -z and A_L(z) = (3/2)(1 - conj z)/(1 - z).
HarmonicMap half_plane_L();

/// Harmonic Koebe function:
///   h = (z - z^2/2 + z^3/6)/(1-z)^3,  g = (z^2/2 + z^3/6)/(1-z)^3.
/// Differentiating gives h' = (1+z)/(1-z)^4 and g' = z(1+z)/(1-z)^4, so the
/// dilatation is w_K(z) = z.
HarmonicMap harmonic_koebe_K();

/// f(z) = z + conj(z)^n / n, n >= 2.
HarmonicMap power_map(int n);

/// f(z) = z/(1-z) - conj(z/(1-z) + log(1-z)); w = -z.
HarmonicMap log_example();

/// k_alpha(z) = ((1+z)/(1-z))^alpha - 1) / (2 alpha), principal branch.
AnalyticFunction k_alpha_function(double alpha);
HarmonicMap k_alpha(double alpha);

/// f = k_alpha + conj(omega0 k_alpha), constant dilatation omega0.
HarmonicMap f_alpha(double alpha, Complex omega0);

/// h = ((1-z)^{-(1+2 beta)} - 1)/(1 + 2 beta) with dilatation w(z) = rho z.
/// Every slice h + lambda g satisfies the concavity inequality with opening
/// alpha = 1 + 2 beta when |rho| < beta/(1 + beta).
HarmonicMap concave_beta(double beta, Complex rho);

/// Dispatch by name: identity, half_plane_L, harmonic_koebe_K, power_map,
/// log_example, k_alpha, f_alpha, concave_beta. Throws InvalidParameter on
/// unknown names or bad parameters.
HarmonicMap catalog(std::string_view name, const CatalogParams& params = {});

struct CatalogEntry {
  std::string name;
  std::string params;  // human-readable parameter schema
  std::string summary;
  std::optional<double> lower_order;
  std::optional<double> upper_order;
  std::string provenance;
};

const std::vector<CatalogEntry>& catalog_entries();

}  // namespace harmap
