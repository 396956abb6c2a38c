#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "approxroots/errors.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/rational.hpp"
#include "approxroots/series.hpp"

namespace approxroots {

// P = digits[0]*base^s + digits[1]*base^(s-1) + ... + digits[s], with every
// digit of Y-degree below deg(base).
struct AdicExpansion {
  YPoly base;
  std::vector<YPoly> digits;
  std::size_t s = 0;

  YPoly reassemble() const {
    YPoly acc;
    for (const auto& d : digits) acc = acc * base + d;
    return acc;
  }
};

// Expansion of an arbitrary P in powers of a monic Q by repeated division.
inline AdicExpansion adic_digits(const YPoly& p, const YPoly& q) {
  if (q.is_zero() || !q.is_monic() || *q.degree() < 1) throw NonMonic("expansion base must be monic of degree >= 1");
  std::vector<YPoly> low_first;
  YPoly cur = p;
  while (!cur.is_zero() && *cur.degree() >= *q.degree()) {
    auto qr = divmod_monic(cur, q);
    low_first.push_back(std::move(qr.remainder));
    cur = std::move(qr.quotient);
  }
  low_first.push_back(std::move(cur));
  AdicExpansion e;
  e.base = q;
  e.s = low_first.size() - 1;
  e.digits.assign(low_first.rbegin(), low_first.rend());
  return e;
}

inline AdicExpansion qadic_expand(const YPoly& p, const YPoly& q) {
  if (p.is_zero() || !p.is_monic()) throw NonMonic("expanded polynomial must be monic");
  return adic_digits(p, q);
}

// Completion of the s-th power: tau_P(Q) = Q + a_1/s.
inline YPoly tschirnhausen(const YPoly& p, const YPoly& q) {
  if (p.is_zero() || !p.is_monic() || q.is_zero() || !q.is_monic()) throw NonMonic("tschirnhausen expects monic inputs");
  const std::size_t dp = *p.degree(), dq = *q.degree();
  if (dq == 0 || dp % dq != 0) throw DegreeMismatch("deg Q must divide deg P");
  const auto e = adic_digits(p, q);
  if (e.s == 0) return q;
  return q + e.digits[1].scaled(Rational(1, static_cast<unsigned long>(e.s)));
}

namespace detail {

inline void check_root_request(const YPoly& p, std::size_t root) {
  if (p.is_zero() || !p.is_monic()) throw NonMonic("approximate roots need a monic polynomial");
  if (root == 0 || *p.degree() % root != 0) throw DegreeMismatch("root order must divide the degree");
}

// Calls visit(parts) for every multiset of parts from {1..max_part} summing
// to total; parts[j] is the multiplicity of part j+1.
inline void for_each_partition(std::size_t total, std::size_t max_part,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts(max_part, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t part) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    if (part == 0) return;
    for (std::size_t m = 0; m * part <= remaining; ++m) {
      parts[part - 1] = m;
      rec(remaining - m * part, part - 1);
    }
    parts[part - 1] = 0;
  };
  rec(total, max_part);
}

inline Integer factorial(std::size_t k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline Integer binomial_int(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace detail

// Solves the triangular coefficient system of P - Q^p top-down: the
// coefficient a_k of Q = Y^m + a_1 Y^(m-1) + ... satisfies
//   alpha_k = p a_k + sum c_{i_1..i_{k-1}} a_1^{i_1} ... a_{k-1}^{i_{k-1}},
// the sum over i_1 + 2 i_2 + ... + (k-1) i_{k-1} = k with integer weights
//   c = binom(p, i_1+...+i_{k-1}) (i_1+...+i_{k-1})! / (i_1! ... i_{k-1}!).
inline YPoly approx_root_direct(const YPoly& p, std::size_t root) {
  detail::check_root_request(p, root);
  if (root == 1) return p;
  const std::size_t n = *p.degree(), m = n / root;
  std::vector<XPoly> a(m + 1);
  a[0] = XPoly(Rational(1));
  // powers[j][e] = a_j^e, grown on demand.
  std::vector<std::vector<XPoly>> powers(m + 1);
  auto power_of = [&](std::size_t j, std::size_t e) -> const XPoly& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(XPoly(Rational(1)));
    while (pw.size() <= e) pw.push_back(pw.back() * a[j]);
    return pw[e];
  };
  const Rational inv_root(1, static_cast<unsigned long>(root));
  for (std::size_t k = 1; k <= m; ++k) {
    XPoly known;
    detail::for_each_partition(k, k - 1, [&](const std::vector<std::size_t>& parts) {
      std::size_t total = 0;
      Integer denom = 1;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        total += parts[j];
        denom *= detail::factorial(parts[j]);
      }
      if (total > root) return;
      const Integer weight = detail::binomial_int(root, total) * detail::factorial(total) / denom;
      XPoly term{Rational(weight)};
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (parts[j] > 0) term *= power_of(j + 1, parts[j]);
      known += term;
    });
    a[k] = (p[n - k] - known).scaled(inv_root);
  }
  std::vector<XPoly> coeffs(m + 1);
  for (std::size_t k = 0; k <= m; ++k) coeffs[m - k] = a[k];
  return YPoly(std::move(coeffs));
}

struct IteratedRoot {
  YPoly root;
  std::size_t iterations = 0;  // applications of the Tschirnhausen operator
};

// Iterates Q <- tau_P(Q) from an arbitrary monic seed of degree deg(P)/p.
// At most deg(P)/p applications are needed; the loop stops as soon as an
// application leaves Q unchanged.
inline IteratedRoot approx_root_iterated(const YPoly& p, std::size_t root, const YPoly& seed) {
  detail::check_root_request(p, root);
  const std::size_t m = *p.degree() / root;
  if (seed.is_zero() || !seed.is_monic()) throw NonMonic("seed must be monic");
  if (*seed.degree() != m) throw DegreeMismatch("seed degree must be deg(P)/p");
  IteratedRoot r{seed, 0};
  for (std::size_t i = 0; i < m; ++i) {
    YPoly next = tschirnhausen(p, r.root);
    ++r.iterations;
    if (next == r.root) break;
    r.root = std::move(next);
  }
  return r;
}

// Purely meromorphic part of P(1/Z)^(1/p): with P = Y^n (1 + u(1/Y)),
// the root is Y^m times the polynomial part of (1 + u)^(1/p) in 1/Y.
inline YPoly approx_root_meromorphic(const YPoly& p, std::size_t root) {
  detail::check_root_request(p, root);
  const std::size_t n = *p.degree(), m = n / root;
  std::vector<XPoly> u(n + 1);
  for (std::size_t i = 1; i <= n; ++i) u[i] = p[n - i];
  const std::size_t order = m + 1;
  TruncSeries<XPoly> useries(std::move(u), order);
  const auto c = binomial_power(useries, Rational(1, static_cast<unsigned long>(root)), order);
  std::vector<XPoly> coeffs(m + 1);
  for (std::size_t k = 0; k <= m; ++k) coeffs[m - k] = c[k];
  return YPoly(std::move(coeffs));
}

}  // namespace approxroots
