#pragma once

#include <cstddef>
#include <vector>

#include "approxroots/errors.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/rational.hpp"

namespace approxroots {

namespace detail {

using XMatrix = std::vector<std::vector<XPoly>>;

inline XMatrix multiply(const XMatrix& a, const XMatrix& b) {
  const std::size_t n = a.size();
  XMatrix c(n, std::vector<XPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Characteristic polynomial det(Y I - A) of a square matrix over Q[X],
// by the Faddeev-LeVerrier recurrence (its divisions are by integers only).
inline YPoly characteristic_polynomial(const XMatrix& a) {
  const std::size_t n = a.size();
  std::vector<XPoly> c(n + 1);
  c[n] = XPoly(Rational(1));
  XMatrix m(n, std::vector<XPoly>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    XMatrix next = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    XMatrix am = multiply(a, m);
    XPoly trace;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = trace.scaled(Rational(-1, static_cast<unsigned long>(k)));
  }
  return YPoly(std::move(c));
}

}  // namespace detail

// Eliminates T from X = P(T), Y = Q(T): returns the norm of Y - Q(T) from
// Q[X][T]/(P(T) - X) down to Q[X], i.e. the characteristic polynomial of
// multiplication by Q(T). This is Res_T(P(T) - X, Q(T) - Y) up to a nonzero
// constant, normalized to be monic in Y of degree deg P.
inline YPoly eliminate_parameter(const XPoly& p, const XPoly& q) {
  if (p.is_zero() || *p.degree() == 0) throw DegenerateMap("X = P(T) needs deg P >= 1");
  const std::size_t n = *p.degree();
  const Rational inv_lead = 1 / p.leading();
  // Modulus (P(T) - X) / lead, a monic polynomial in T over Q[X].
  std::vector<XPoly> mod(n + 1);
  for (std::size_t i = 0; i <= n; ++i) mod[i] = XPoly(Rational(p[i] * inv_lead));
  mod[0] -= XPoly::monomial(inv_lead, 1);
  const YPoly modulus(std::move(mod));

  std::vector<XPoly> qc;
  for (const auto& c : q.coefficients()) qc.push_back(XPoly(c));
  const YPoly qt(std::move(qc));

  detail::XMatrix a(n, std::vector<XPoly>(n));
  YPoly column = divmod_monic(qt, modulus).remainder;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) a[r][c] = column[r];
    column = divmod_monic(column.shifted(1), modulus).remainder;
  }
  return detail::characteristic_polynomial(a);
}

// G(P(T), Q(T)) for a bivariate G in X, Y.
inline XPoly substitute(const YPoly& g, const XPoly& p, const XPoly& q) {
  XPoly acc;
  for (std::size_t j = g.size(); j-- > 0;) acc = acc * q + g[j].evaluate(p);
  return acc;
}

}  // namespace approxroots
