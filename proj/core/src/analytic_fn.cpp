#include "harmap/analytic_fn.hpp"

#include <sstream>
#include <utility>

#include "harmap/errors.hpp"

namespace harmap {

AnalyticFunction::AnalyticFunction(Kind kind, std::string label,
                                   std::vector<Complex> coeffs,
                                   std::shared_ptr<const Rule> rule)
    : kind_(kind),
      label_(std::move(label)),
      coeffs_(std::move(coeffs)),
      rule_(std::move(rule)) {}

AnalyticFunction AnalyticFunction::closed_form(std::string label, Rule rule) {
  return AnalyticFunction(Kind::closed_form, std::move(label), {},
                          std::make_shared<const Rule>(std::move(rule)));
}

AnalyticFunction AnalyticFunction::taylor(std::vector<Complex> coeffs,
                                          std::string label) {
  if (coeffs.size() < 4) {
    std::ostringstream msg;
    msg << "Taylor representation needs at least 4 coefficients, got "
        << coeffs.size();
    throw RepresentationError(msg.str());
  }
  auto shared = std::make_shared<const std::vector<Complex>>(coeffs);
  Rule rule = [shared](XComplex z) { return polynomial_series(*shared, z); };
  return AnalyticFunction(Kind::taylor, std::move(label), std::move(coeffs),
                          std::make_shared<const Rule>(std::move(rule)));
}

LocalSeries AnalyticFunction::local_series(XComplex z) const {
  if (!(std::abs(z) < 1.0L)) {
    std::ostringstream msg;
    msg << "point " << z << " is outside the open unit disk";
    throw DomainError(msg.str(), Complex(z));
  }
  return (*rule_)(z);
}

Jet3 AnalyticFunction::jet(Complex z) const {
  const LocalSeries s = local_series(XComplex(z));
  return {Complex(s.derivative(0)), Complex(s.derivative(1)),
          Complex(s.derivative(2)), Complex(s.derivative(3))};
}

Jet3 eval_jet(const AnalyticFunction& fn, Complex z) { return fn.jet(z); }

AnalyticFunction taylor_from_coeffs(std::span<const Complex> coeffs) {
  return AnalyticFunction::taylor({coeffs.begin(), coeffs.end()});
}

LocalSeries polynomial_series(std::span<const Complex> coeffs, XComplex z) {
  // Horner for p, p', p'', p''' together.
  XComplex p0 = 0.0L, p1 = 0.0L, p2 = 0.0L, p3 = 0.0L;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    p3 = p3 * z + 3.0L * p2;
    p2 = p2 * z + 2.0L * p1;
    p1 = p1 * z + p0;
    p0 = p0 * z + XComplex(*it);
  }
  LocalSeries s;
  s.c = {p0, p1, p2 / 2.0L, p3 / 6.0L};
  return s;
}

AnalyticFunction linear_combination(XComplex a, const AnalyticFunction& f,
                                    XComplex b, const AnalyticFunction& g,
                                    XComplex c, std::string label) {
  if (label.empty()) {
    std::ostringstream os;
    os << "lincomb(" << f.label() << "," << g.label() << ")";
    label = os.str();
  }
  return AnalyticFunction::closed_form(
      std::move(label), [a, b, c, f, g](XComplex z) {
        return a * f.local_series(z) + b * g.local_series(z) + c;
      });
}

AnalyticFunction compose(const AnalyticFunction& f,
                         std::function<LocalSeries(XComplex)> inner,
                         std::string label) {
  if (label.empty()) label = f.label() + "@sigma";
  return AnalyticFunction::closed_form(
      std::move(label), [f, inner = std::move(inner)](XComplex z) {
        const LocalSeries u = inner(z);
        const LocalSeries outer = f.local_series(u.value());
        std::array<XComplex, 4> d{outer.derivative(0), outer.derivative(1),
                                 outer.derivative(2), outer.derivative(3)};
        return harmap::compose<3>(d, u);
      });
}

AnalyticFunction zero_function() {
  return AnalyticFunction::closed_form(
      "0", [](XComplex) { return LocalSeries::constant(0.0L); });
}

AnalyticFunction identity_function() {
  return AnalyticFunction::closed_form(
      "z", [](XComplex z) { return LocalSeries::variable(z); });
}

}  // namespace harmap
