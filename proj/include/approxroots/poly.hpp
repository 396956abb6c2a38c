#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "approxroots/errors.hpp"
#include "approxroots/rational.hpp"

namespace approxroots {

template <class R>
class Poly;

template <class R>
struct ring_traits {
  static R zero() { return R(0); }
  static R one() { return R(1); }
};

template <class R>
struct ring_traits<Poly<R>> {
  static Poly<R> zero() { return Poly<R>(); }
  static Poly<R> one() { return Poly<R>(ring_traits<R>::one()); }
};

template <class R>
bool is_zero(const Poly<R>& p);

template <class T>
struct is_poly : std::false_type {};
template <class R>
struct is_poly<Poly<R>> : std::true_type {};
template <class T>
inline constexpr bool is_poly_v = is_poly<T>::value;

// Dense univariate polynomial over a commutative ring R. Coefficients are
// indexed by exponent and the highest stored coefficient is never zero, so
// the zero polynomial has no coefficients and no degree.
template <class R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  explicit Poly(R constant) {
    if (!approxroots::is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly monomial(R c, std::size_t k) {
    if (approxroots::is_zero(c)) return Poly();
    std::vector<R> v(k + 1, ring_traits<R>::zero());
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(ring_traits<R>::one(), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  // Degree with the zero polynomial mapped to 0; for callers that have
  // already excluded zero or treat it like a constant.
  std::size_t degree_or_zero() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  // Lowest exponent with a nonzero coefficient.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!approxroots::is_zero(coeffs_[i])) return i;
    return std::nullopt;
  }

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  const R& operator[](std::size_t i) const {
    static const R zero = ring_traits<R>::zero();
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const R& leading() const { return (*this)[coeffs_.empty() ? 0 : coeffs_.size() - 1]; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == ring_traits<R>::one(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  void set(std::size_t i, R c) {
    if (i >= coeffs_.size()) {
      if (approxroots::is_zero(c)) return;
      coeffs_.resize(i + 1, ring_traits<R>::zero());
    }
    coeffs_[i] = std::move(c);
    trim();
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<R>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_traits<R>::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, ring_traits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (approxroots::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Multiply every coefficient by a scalar from R or from any ring R can be
  // multiplied by (e.g. a Rational for polynomials over Q[X]).
  template <class S>
  Poly scaled(const S& s) const {
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      if constexpr (is_poly_v<R> && !std::is_same_v<S, R>)
        out.push_back(c.scaled(s));
      else
        out.push_back(R(c * s));
    }
    return Poly(std::move(out));
  }

  Poly shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<R> out(k, ring_traits<R>::zero());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
  }

  // Keep only the terms of exponent < k.
  Poly truncated(std::size_t k) const {
    if (k >= coeffs_.size()) return *this;
    return Poly(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k)));
  }

  Poly pow(unsigned long e) const {
    Poly result(ring_traits<R>::one());
    Poly base = *this;
    while (e > 0) {
      if (e & 1UL) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  // Horner evaluation at x; S must be constructible from R.
  template <class S>
  S evaluate(const S& x) const {
    S acc = S(ring_traits<R>::zero());
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = S(acc * x + S(coeffs_[i]));
    return acc;
  }

  template <class F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<const R&>()))> {
    using Out = decltype(f(std::declval<const R&>()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Poly<Out>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && approxroots::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

using XPoly = Poly<Rational>;  // polynomials in X (or in T) over Q
using YPoly = Poly<XPoly>;     // polynomials in Y over Q[X]
using ZPoly = Poly<Integer>;   // integer polynomials, used for fraction-free work

template <class R>
struct DivMod {
  Poly<R> quotient;
  Poly<R> remainder;
};

// Euclidean division by a monic divisor; exact over any coefficient ring.
template <class R>
DivMod<R> divmod_monic(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero() || !b.is_monic()) throw NonMonicDivisor("divisor must be monic and nonzero");
  const std::size_t db = *b.degree();
  if (a.is_zero() || *a.degree() < db) return {Poly<R>(), a};
  std::vector<R> rem = a.coefficients();
  std::vector<R> quo(rem.size() - db, ring_traits<R>::zero());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (is_zero(rem[i])) continue;
    const R c = rem[i];
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  rem.resize(db);
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InexactDivision("integer quotient");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) { return Rational(a / b); }

// Quotient of a by b when b divides a exactly; throws InexactDivision otherwise.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  if (a.is_zero()) return Poly<R>();
  const std::size_t db = *b.degree();
  if (*a.degree() < db) throw InexactDivision("degree too small");
  std::vector<R> rem = a.coefficients();
  std::vector<R> quo(rem.size() - db, ring_traits<R>::zero());
  const R& lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (is_zero(rem[i])) continue;
    R c = exact_div(rem[i], lead);
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    quo[i - db] = std::move(c);
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw InexactDivision("nonzero remainder");
  return Poly<R>(std::move(quo));
}

// Division with remainder over the field Q.
inline DivMod<Rational> divmod(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  const Rational inv = 1 / b.leading();
  auto r = divmod_monic(a.scaled(inv), b.scaled(inv));
  return {std::move(r.quotient), r.remainder.scaled(b.leading())};
}

// YPoly helpers ------------------------------------------------------------

inline YPoly y_monomial(const XPoly& c, std::size_t k) { return YPoly::monomial(c, k); }
inline YPoly y_constant(const XPoly& c) { return YPoly(c); }
inline XPoly x_monomial(const Rational& c, std::size_t k) { return XPoly::monomial(c, k); }

// Lowest X-exponent occurring in any coefficient of a bivariate polynomial.
inline std::optional<std::size_t> x_valuation(const YPoly& p) {
  std::optional<std::size_t> v;
  for (const auto& c : p.coefficients()) {
    auto cv = c.valuation();
    if (cv && (!v || *cv < *v)) v = cv;
  }
  return v;
}

inline std::size_t x_degree(const YPoly& p) {
  std::size_t d = 0;
  for (const auto& c : p.coefficients()) d = std::max(d, c.degree_or_zero());
  return d;
}

// Value at X = 0 of every Y-coefficient.
inline XPoly at_x_zero(const YPoly& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coefficients()) out.push_back(c[0]);
  return XPoly(std::move(out));
}

}  // namespace approxroots
