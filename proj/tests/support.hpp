#pragma once

// Random generators and independent oracles shared by the test suites.
// Every generator takes the caller's engine; suites seed it with a fixed value.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "approxroots/branch.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/series.hpp"

namespace testing_support {

using namespace approxroots;
using Rng = std::mt19937;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, bool nonzero = false) {
  for (;;) {
    Rational r(uniform(rng, -4, 4), uniform(rng, 1, 3));
    r.canonicalize();
    if (!nonzero || !is_zero(r)) return r;
  }
}

inline XPoly random_xpoly(Rng& rng, std::size_t max_degree, std::size_t min_valuation = 0) {
  std::vector<Rational> c(max_degree + 1);
  for (std::size_t i = min_valuation; i <= max_degree; ++i)
    if (uniform(rng, 0, 2) != 0) c[i] = small_rational(rng);
  return XPoly(std::move(c));
}

inline YPoly random_monic(Rng& rng, std::size_t degree, std::size_t x_degree) {
  std::vector<XPoly> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = random_xpoly(rng, x_degree);
  c[degree] = XPoly(Rational(1));
  return YPoly(std::move(c));
}

// Random primitive local parameterization with x = T^n. Characteristic
// exponents are drawn above n (generic coordinates) unless allow_low is set,
// in which case the first exponent may fall below n. Between characteristic
// exponents, terms divisible by the current gcd are sprinkled in.
inline Parameterization random_parameterization(Rng& rng, long n, bool allow_low = false) {
  std::vector<Rational> y;
  auto put = [&](long j, Rational c) {
    if (static_cast<long>(y.size()) <= j) y.resize(static_cast<std::size_t>(j) + 1);
    y[static_cast<std::size_t>(j)] = std::move(c);
  };
  long e = n;
  long last = (allow_low && uniform(rng, 0, 1) == 0) ? 0 : n;
  if (last == n && n > 1 && uniform(rng, 0, 1) == 0) put(n, small_rational(rng, true));  // a smooth term x
  while (e > 1) {
    // Ordinary terms (divisible by e) strictly between characteristic exponents.
    long j = last + uniform(rng, 1, 3);
    while (j % e != 0) ++j;
    long next_char = last + uniform(rng, 1, n);
    while (next_char % e == 0) ++next_char;
    if (j < next_char && uniform(rng, 0, 1) == 0) put(j, small_rational(rng, true));
    put(next_char, small_rational(rng, true));
    e = std::gcd(e, next_char);
    last = next_char;
  }
  if (uniform(rng, 0, 1) == 0) put(last + uniform(rng, 1, 3), small_rational(rng, true));
  return Parameterization{n, XPoly(std::move(y))};
}

// Brute-force semigroup membership by a dynamic program over all sums.
inline std::set<long> semigroup_bruteforce(const std::vector<long>& gens, long bound) {
  std::set<long> out{0};
  for (long v = 1; v <= bound; ++v)
    for (long g : gens)
      if (g <= v && out.count(v - g)) {
        out.insert(v);
        break;
      }
  return out;
}

// Number of blow-ups of the minimal embedded resolution from the generic
// characteristic exponents: the sum of all quotients of the Euclidean
// algorithm on (n, b_1), then on (e_{k-1}, b_k - b_{k-1}).
inline long euclid_blowups(const std::vector<long>& b) {
  long total = 0, e = b[0];
  for (std::size_t k = 1; k < b.size(); ++k) {
    long x = e, y = k == 1 ? b[1] : b[k] - b[k - 1];
    while (x != 0 && y != 0) {
      if (x < y) std::swap(x, y);
      total += x / y;
      x %= y;
    }
    e = std::gcd(e, b[k]);
  }
  return total;
}

// Rewrites the branch (x(T), y(T)), v(x) = n with lead coefficient 1, as
// X = S^n, Y = y(S) truncated below order: S = T (x/T^n)^(1/n).
inline Parameterization reparametrize(const XPoly& x, const XPoly& y, std::size_t order) {
  const std::size_t n = *x.valuation();
  QSeries unit = QSeries(x).shifted(-static_cast<long>(n));
  std::vector<Rational> u = unit.stored();
  u[0] = 0;
  const QSeries root = binomial_power(QSeries(std::vector<Rational>(u), order + 1), Rational(1, n), order + 1);
  const QSeries s_of_t = root.shifted(1).truncated(order + 1);
  const QSeries t_of_s = reversion(s_of_t, order + 1);
  const QSeries ys = compose(QSeries(y), t_of_s, order + 1);
  std::vector<Rational> c = ys.stored();
  if (c.size() > order) c.resize(order);
  return Parameterization{static_cast<long>(n), XPoly(std::move(c))};
}

}  // namespace testing_support
