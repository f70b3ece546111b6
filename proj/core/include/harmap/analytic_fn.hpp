#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "harmap/series.hpp"
#include "harmap/types.hpp"

namespace harmap {

/// Value and first three derivatives of an analytic function at a point.
struct Jet3 {
  Complex f0, f1, f2, f3;
};

using LocalSeries = Series<3>;

/// An analytic function on the unit disk that can report its 3-jet at any
/// interior point. Immutable and cheap to copy; copies share the rule.
///
/// Two kinds exist: closed-form entries whose derivatives come from exact
/// series arithmetic, and truncated Taylor polynomials c_0 + c_1 z + ... .
class AnalyticFunction {
 public:
  enum class Kind { closed_form, taylor };
  using Rule = std::function<LocalSeries(XComplex)>;

  /// `rule(z)` returns the local series at z; it is only called with |z| < 1.
  static AnalyticFunction closed_form(std::string label, Rule rule);

  /// Throws RepresentationError when fewer than 4 coefficients are given.
  static AnalyticFunction taylor(std::vector<Complex> coeffs,
                                 std::string label = "taylor");

  /// Throws DomainError when |z| >= 1.
  Jet3 jet(Complex z) const;
  /// Local series in working precision; same domain check as jet().
  LocalSeries local_series(XComplex z) const;

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  /// Empty for closed-form entries.
  const std::vector<Complex>& coefficients() const { return coeffs_; }

 private:
  AnalyticFunction(Kind kind, std::string label, std::vector<Complex> coeffs,
                   std::shared_ptr<const Rule> rule);

  Kind kind_;
  std::string label_;
  std::vector<Complex> coeffs_;
  std::shared_ptr<const Rule> rule_;
};

Jet3 eval_jet(const AnalyticFunction& fn, Complex z);

AnalyticFunction taylor_from_coeffs(std::span<const Complex> coeffs);

/// a*f + b*g + c.
AnalyticFunction linear_combination(XComplex a, const AnalyticFunction& f,
                                    XComplex b, const AnalyticFunction& g,
                                    XComplex c = 0.0L, std::string label = {});

/// f∘inner, where `inner` maps the disk into itself and returns its local
/// series. Chain-rule terms are exact through order 3.
AnalyticFunction compose(const AnalyticFunction& f,
                         std::function<LocalSeries(XComplex)> inner,
                         std::string label = {});

/// The zero function.
AnalyticFunction zero_function();

/// The identity z.
AnalyticFunction identity_function();

/// Horner evaluation of a polynomial and its first three derivatives.
LocalSeries polynomial_series(std::span<const Complex> coeffs, XComplex z);

}  // namespace harmap
