#pragma once

// Truncated power series in a local variable t around a base point:
//   f(z0 + t) = c[0] + c[1] t + ... + c[N] t^N + O(t^{N+1}).
// Closed-form derivative rules are written as arithmetic on these series,
// which gives exact (up to rounding) derivatives through order N.

#include <array>
#include <cstddef>

#include "harmap/types.hpp"

namespace harmap {

template <std::size_t N>
struct Series {
  std::array<XComplex, N + 1> c{};

  static Series constant(XComplex v) {
    Series s;
    s.c[0] = v;
    return s;
  }

  /// The identity function expanded at z0.
  static Series variable(XComplex z0) {
    Series s;
    s.c[0] = z0;
    if constexpr (N >= 1) s.c[1] = 1.0L;
    return s;
  }

  XComplex value() const { return c[0]; }

  /// k-th derivative at the base point.
  XComplex derivative(std::size_t k) const {
    XReal fact = 1.0L;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<XReal>(i);
    return c[k] * fact;
  }

  Series& operator+=(const Series& o) {
    for (std::size_t k = 0; k <= N; ++k) c[k] += o.c[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t k = 0; k <= N; ++k) c[k] -= o.c[k];
    return *this;
  }
  Series& operator*=(XComplex s) {
    for (auto& v : c) v *= s;
    return *this;
  }
};

template <std::size_t N>
Series<N> operator+(Series<N> a, const Series<N>& b) {
  return a += b;
}
template <std::size_t N>
Series<N> operator-(Series<N> a, const Series<N>& b) {
  return a -= b;
}
template <std::size_t N>
Series<N> operator-(Series<N> a) {
  for (auto& v : a.c) v = -v;
  return a;
}
template <std::size_t N>
Series<N> operator*(Series<N> a, XComplex s) {
  return a *= s;
}
template <std::size_t N>
Series<N> operator*(XComplex s, Series<N> a) {
  return a *= s;
}
template <std::size_t N>
Series<N> operator+(Series<N> a, XComplex s) {
  a.c[0] += s;
  return a;
}
template <std::size_t N>
Series<N> operator+(XComplex s, Series<N> a) {
  a.c[0] += s;
  return a;
}
template <std::size_t N>
Series<N> operator-(Series<N> a, XComplex s) {
  a.c[0] -= s;
  return a;
}
template <std::size_t N>
Series<N> operator-(XComplex s, const Series<N>& a) {
  return (-a) + s;
}

template <std::size_t N>
Series<N> operator*(const Series<N>& a, const Series<N>& b) {
  Series<N> r;
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t i = 0; i <= k; ++i) r.c[k] += a.c[i] * b.c[k - i];
  return r;
}

/// Requires b.value() != 0; the caller checks singularities.
template <std::size_t N>
Series<N> operator/(const Series<N>& a, const Series<N>& b) {
  Series<N> q;
  for (std::size_t k = 0; k <= N; ++k) {
    XComplex acc = a.c[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= b.c[i] * q.c[k - i];
    q.c[k] = acc / b.c[0];
  }
  return q;
}

/// F(u(t)) given the derivatives F^(j)(u0), j = 0..N, of the outer function
/// at u0 = u.value().
template <std::size_t N>
Series<N> compose(const std::array<XComplex, N + 1>& outer_derivs,
                  const Series<N>& u) {
  Series<N> delta = u;
  delta.c[0] = 0.0;
  Series<N> result = Series<N>::constant(outer_derivs[0]);
  Series<N> power = Series<N>::constant(1.0);
  XReal fact = 1.0L;
  for (std::size_t j = 1; j <= N; ++j) {
    power = power * delta;
    fact *= static_cast<XReal>(j);
    result += power * (outer_derivs[j] / fact);
  }
  return result;
}

/// Principal branch u^p.
template <std::size_t N>
Series<N> pow(const Series<N>& u, XComplex p) {
  std::array<XComplex, N + 1> d;
  const XComplex u0 = u.value();
  const XComplex log_u0 = std::log(u0);
  XComplex coef = 1.0L;
  for (std::size_t j = 0; j <= N; ++j) {
    d[j] = coef * std::exp((p - static_cast<XReal>(j)) * log_u0);
    coef *= p - static_cast<XReal>(j);
  }
  return compose<N>(d, u);
}

/// Principal branch log u.
template <std::size_t N>
Series<N> log(const Series<N>& u) {
  std::array<XComplex, N + 1> d;
  const XComplex u0 = u.value();
  d[0] = std::log(u0);
  XComplex inv_pow = 1.0L / u0;
  XReal sign_fact = 1.0L;  // (-1)^{j-1} (j-1)!
  for (std::size_t j = 1; j <= N; ++j) {
    d[j] = sign_fact * inv_pow;
    inv_pow /= u0;
    sign_fact *= -static_cast<XReal>(j);
  }
  return compose<N>(d, u);
}

/// Drops the constant term and shifts: the series of f' from that of f,
/// one order shorter.
template <std::size_t N>
Series<N - 1> differentiate(const Series<N>& f) {
  Series<N - 1> r;
  for (std::size_t k = 1; k <= N; ++k)
    r.c[k - 1] = f.c[k] * static_cast<XReal>(k);
  return r;
}

}  // namespace harmap
