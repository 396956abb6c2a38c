#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "approxroots/errors.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/rational.hpp"

namespace approxroots {

namespace detail {

inline Integer denominator_lcm(const YPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients())
    for (const auto& q : c.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

inline ZPoly to_integer_poly(const XPoly& p, const Integer& scale) {
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& q : p.coefficients()) {
    Rational s = q * Rational(scale);
    out.push_back(s.get_num());
  }
  return ZPoly(std::move(out));
}

inline XPoly to_rational_poly(const ZPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& z : p.coefficients()) out.emplace_back(z);
  return XPoly(std::move(out));
}

// Determinant by Bareiss' fraction-free elimination; every division is exact.
inline ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return ZPoly(Integer(1));
  bool negate = false;
  ZPoly prev(Integer(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return ZPoly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly t = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t -= m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace detail

// Sylvester resultant with respect to Y. Convention: the first deg(b) rows of
// the Sylvester matrix hold a's coefficients (highest first), the remaining
// deg(a) rows hold b's, so Res(Y - u, Y - v) = u - v.
inline XPoly resultant_y(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly();
  const std::size_t da = *a.degree(), db = *b.degree();
  const std::size_t n = da + db;
  if (n == 0) return XPoly(Rational(1));

  const Integer la = detail::denominator_lcm(a), lb = detail::denominator_lcm(b);
  std::vector<ZPoly> ia, ib;
  for (std::size_t j = 0; j <= da; ++j) ia.push_back(detail::to_integer_poly(a[da - j], la));
  for (std::size_t j = 0; j <= db; ++j) ib.push_back(detail::to_integer_poly(b[db - j], lb));

  std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j <= da; ++j) m[i][i + j] = ia[j];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j <= db; ++j) m[db + i][i + j] = ib[j];

  XPoly det = detail::to_rational_poly(detail::bareiss_determinant(std::move(m)));
  Integer scale_a, scale_b;
  mpz_pow_ui(scale_a.get_mpz_t(), la.get_mpz_t(), db);
  mpz_pow_ui(scale_b.get_mpz_t(), lb.get_mpz_t(), da);
  return det.scaled(Rational(1, 1) / Rational(scale_a * scale_b));
}

// Local intersection multiplicity at the origin, v_X(Res_Y(f, phi)).
inline ExtInt intersection_number(const YPoly& f, const YPoly& phi) {
  if (!f.is_monic()) throw NonMonic("intersection_number expects f monic in Y");
  if (phi.is_zero()) return ExtInt::infinity();
  auto v = resultant_y(f, phi).valuation();
  if (!v) return ExtInt::infinity();
  return ExtInt(static_cast<std::int64_t>(*v));
}

}  // namespace approxroots
