#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "approxroots/branch.hpp"
#include "approxroots/elimination.hpp"
#include "approxroots/errors.hpp"
#include "approxroots/format.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/series.hpp"

namespace approxroots {

// The map T -> (P(T), Q(T)) of the line into the plane.
struct PolyPair {
  XPoly P;
  XPoly Q;
  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

// F with F(P(T), Q(T)) = 0, monic in Y of degree deg P and of X-degree deg Q.
inline YPoly implicit_curve(const PolyPair& pp) {
  if (pp.P.degree_or_zero() < 1 || pp.Q.degree_or_zero() < 1)
    throw DegenerateMap("implicit_curve needs deg P >= 1 and deg Q >= 1");
  return eliminate_parameter(pp.P, pp.Q);
}

// d_T G(P(T), Q(T)); its negative is the intersection number at infinity.
inline long composition_degree(const YPoly& g, const PolyPair& pp) {
  const XPoly h = substitute(g, pp.P, pp.Q);
  if (h.is_zero()) throw IdenticallyZero("G(P(T), Q(T)) vanishes identically");
  return static_cast<long>(*h.degree());
}

// One elementary automorphism (X, Y) -> (U, V) of the plane.
struct ElementaryStep {
  enum class Kind { Affine, ShearX, ShearY };
  Kind kind = Kind::Affine;
  // Affine: U = a X + b, V = c Y + d.
  Rational a = 1, b = 0, c = 1, d = 0;
  // ShearX: U = X - coef Y^power, V = Y.  ShearY: U = X, V = Y - coef X^power.
  Rational coef = 0;
  std::size_t power = 0;

  static ElementaryStep affine(Rational a, Rational b, Rational c, Rational d) {
    if (is_zero(a) || is_zero(c)) throw DegenerateMap("affine step must be invertible");
    ElementaryStep s;
    s.a = std::move(a);
    s.b = std::move(b);
    s.c = std::move(c);
    s.d = std::move(d);
    return s;
  }
  static ElementaryStep shear_x(Rational coef, std::size_t power) {
    ElementaryStep s;
    s.kind = Kind::ShearX;
    s.coef = std::move(coef);
    s.power = power;
    return s;
  }
  static ElementaryStep shear_y(Rational coef, std::size_t power) {
    ElementaryStep s;
    s.kind = Kind::ShearY;
    s.coef = std::move(coef);
    s.power = power;
    return s;
  }

  // (U(x, y), V(x, y)) for elements x, y of any commutative ring over Q.
  template <class R>
  std::pair<R, R> apply(const R& x, const R& y) const {
    switch (kind) {
      case Kind::Affine:
        return {x.scaled(a) + R(ring_traits<R>::one()).scaled(b), y.scaled(c) + R(ring_traits<R>::one()).scaled(d)};
      case Kind::ShearX:
        return {x - y.pow(power).scaled(coef), y};
      case Kind::ShearY:
        return {x, y - x.pow(power).scaled(coef)};
    }
    throw std::logic_error("unknown step kind");
  }

  std::string to_string() const {
    auto [u, v] = apply(YPoly(XPoly::variable()), YPoly::variable());
    return "U = " + approxroots::to_string(u) + ", V = " + approxroots::to_string(v);
  }
};

// Steps applied left to right: (P, Q) -> (U_1(P, Q), V_1(P, Q)) -> ...
struct AutomorphismChain {
  std::vector<ElementaryStep> steps;

  PolyPair apply(const PolyPair& pp) const {
    PolyPair cur = pp;
    for (const auto& s : steps) {
      auto [u, v] = s.apply(cur.P, cur.Q);
      cur = PolyPair{std::move(u), std::move(v)};
    }
    return cur;
  }
};

// The composite coordinates (U(X, Y), V(X, Y)) of the chain.
inline std::pair<YPoly, YPoly> chain_coordinates(const AutomorphismChain& chain) {
  YPoly u(XPoly::variable()), v = YPoly::variable();
  for (const auto& s : chain.steps) std::tie(u, v) = s.apply(u, v);
  return {u, v};
}

struct EpimorphismResult {
  bool epimorphism = false;
  AutomorphismChain chain;  // rectifies (P, Q) to (T, 0) when epimorphism holds
};

// Decides whether X -> P, Y -> Q is onto Q[T], building the rectifying chain:
// cancel the leading term of the higher-degree polynomial by a power of the
// other until one becomes constant. If at some point neither degree divides
// the other the map is not onto.
inline EpimorphismResult epimorphism_check(const PolyPair& pp) {
  EpimorphismResult r;
  PolyPair cur = pp;
  auto push = [&](ElementaryStep s) {
    auto [u, v] = s.apply(cur.P, cur.Q);
    cur = PolyPair{std::move(u), std::move(v)};
    r.chain.steps.push_back(std::move(s));
  };
  for (;;) {
    const std::size_t dp = cur.P.degree_or_zero(), dq = cur.Q.degree_or_zero();
    if (dp >= 1 && dq >= 1) {
      if (dq >= dp && dq % dp == 0) {
        const std::size_t k = dq / dp;
        Rational lead_pow = 1;
        for (std::size_t i = 0; i < k; ++i) lead_pow *= cur.P.leading();
        push(ElementaryStep::shear_y(cur.Q.leading() / lead_pow, k));
      } else if (dp > dq && dp % dq == 0) {
        const std::size_t k = dp / dq;
        Rational lead_pow = 1;
        for (std::size_t i = 0; i < k; ++i) lead_pow *= cur.Q.leading();
        push(ElementaryStep::shear_x(cur.P.leading() / lead_pow, k));
      } else {
        return EpimorphismResult{};
      }
    } else if (dp == 1) {
      // P = a1 T + a0, Q = b0: U = X/a1 - a0/a1, V = Y - b0.
      const Rational a1 = cur.P[1], a0 = cur.P[0], b0 = cur.Q[0];
      if (!(a1 == 1 && is_zero(a0) && is_zero(b0))) push(ElementaryStep::affine(1 / a1, -a0 / a1, Rational(1), -b0));
      break;
    } else if (dq == 1) {
      // Exchange the roles: (P, Q) -> (P + Q, Q) -> (P + Q, -P).
      push(ElementaryStep::shear_x(Rational(-1), 1));
      push(ElementaryStep::shear_y(Rational(1), 1));
    } else {
      return EpimorphismResult{};
    }
  }
  const PolyPair target{XPoly::variable(), XPoly()};
  if (r.chain.apply(pp) != target) throw std::logic_error("rectifying chain failed to compose to (T, 0)");
  r.epimorphism = true;
  return r;
}

// x = tau^N, y = y(tau): the place at infinity of the image curve, from
// 1/P(T) = tau^N. Coefficients of y are exact for exponents < known_below().
struct MeromParam {
  long N = 0;
  LaurentSeries y;
};

inline MeromParam merom_param_at_infinity(const PolyPair& pp, std::size_t precision_order) {
  if (pp.P.degree_or_zero() < 1) throw DegenerateMap("merom_param_at_infinity needs deg P >= 1");
  const std::size_t n = *pp.P.degree();
  const std::size_t m = pp.Q.degree_or_zero();
  const Rational alpha0 = pp.P.leading();
  const auto r = rational_root(1 / alpha0, n);
  if (!r || (n % 2 == 0 && sgn(alpha0) < 0)) throw IrrationalLeadingRoot("leading coefficient has no rational N-th root");

  // With s = 1/T: P = alpha0 s^-N (1 + u(s)), tau = r s (1 + u)^(-1/N).
  const std::size_t len = precision_order + m;
  std::vector<Rational> u(n + 1);
  for (std::size_t i = 1; i <= n; ++i) u[i] = pp.P[n - i] / alpha0;
  const QSeries useries(XPoly(std::move(u)));
  const QSeries tau_of_s =
      binomial_power(useries, Rational(-1, static_cast<unsigned long>(n)), len + 1).shifted(1).scaled(*r);
  const QSeries s_of_tau = reversion(tau_of_s, len + 1);
  // T = 1/s = tau^-1 w(tau), w = tau / s(tau).
  const QSeries w = inverse(s_of_tau.shifted(-1), len);
  // y = sum_j beta_j T^j = tau^-M sum_j beta_j tau^(M-j) w^j.
  QSeries acc(std::vector<Rational>{}, len);
  QSeries wpow(std::vector<Rational>{Rational(1)}, len);
  for (std::size_t j = 0; j <= m; ++j) {
    if (j > 0) wpow = (wpow * w).truncated(len);
    if (!is_zero(pp.Q[j])) acc = acc + wpow.shifted(static_cast<long>(m - j)).truncated(len).scaled(pp.Q[j]);
  }
  return MeromParam{static_cast<long>(n), LaurentSeries{-static_cast<long>(m), acc.truncated(len)}};
}

// Same fields as CharData; B_0 = -N and the B_i are signed.
using MeromCharData = CharData;

inline MeromCharData merom_char_sequence(long n, const LaurentSeries& y) {
  if (n < 1) throw NotPrimitive("N must be at least 1");
  std::vector<long> b{-n};
  long e = n;
  const auto supp = y.support();
  while (e > 1) {
    auto it = std::find_if(supp.begin(), supp.end(), [e](long j) { return j % e != 0; });
    if (it == supp.end()) {
      if (y.series.is_exact()) throw NotPrimitive("exponents of y share a factor with N");
      throw InsufficientPrecision("E did not reach 1 within the known coefficients");
    }
    b.push_back(*it);
    e = std::gcd(e, std::abs(*it));
  }
  return char_data_from_B(b);
}

// Digits (i_{-1}, i_0, ..., i_{G-1}) with gamma = i_{-1} Bbar_0 + sum i_k Bbar_{k+1},
// i_{-1} >= 0 and 0 <= i_k < N_{k+1}.
inline std::vector<long> strict_expand(long gamma, const MeromCharData& md) {
  const std::size_t g = static_cast<std::size_t>(md.genus);
  const long b0 = md.Bbar.at(0);
  std::vector<long> digits(g, 0);
  std::optional<std::vector<long>> found;
  for (;;) {
    long rest = gamma;
    for (std::size_t k = 0; k < g; ++k) rest -= digits[k] * md.Bbar[k + 1];
    if (rest % b0 == 0 && rest / b0 >= 0) {
      std::vector<long> full{rest / b0};
      full.insert(full.end(), digits.begin(), digits.end());
      if (found) throw std::logic_error("strict expansion is not unique");
      found = std::move(full);
    }
    std::size_t k = 0;
    while (k < g && ++digits[k] == md.Nseq[k]) digits[k++] = 0;
    if (k == g) break;
  }
  if (!found) throw NotRepresentable(std::to_string(gamma) + " is not in the semigroup at infinity");
  return *found;
}

}  // namespace approxroots
