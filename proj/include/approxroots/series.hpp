#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "approxroots/errors.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/rational.hpp"

namespace approxroots {

// Power series in one variable known up to (excluding) a precision order.
// A precision of kExact marks a series that is known completely, i.e. a
// polynomial; exactness survives operations whose result is again finite.
template <class R>
class TruncSeries {
 public:
  static constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

  TruncSeries() = default;
  explicit TruncSeries(const Poly<R>& p, std::size_t precision = kExact) : precision_(precision) {
    const auto& c = p.coefficients();
    const std::size_t n = std::min(c.size(), precision);
    coeffs_.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
    trim();
  }
  TruncSeries(std::vector<R> coeffs, std::size_t precision) : coeffs_(std::move(coeffs)), precision_(precision) {
    if (coeffs_.size() > precision_) coeffs_.resize(precision_);
    trim();
  }

  std::size_t precision() const { return precision_; }
  bool is_exact() const { return precision_ == kExact; }
  const std::vector<R>& stored() const { return coeffs_; }

  const R& operator[](std::size_t i) const {
    static const R zero = ring_traits<R>::zero();
    if (i >= precision_) throw InsufficientPrecision("coefficient beyond known order");
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }

  // Order of the series; nullopt for the exact zero series. Throws when every
  // known coefficient vanishes but the series is only known approximately.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero(coeffs_[i])) return i;
    if (is_exact()) return std::nullopt;
    throw InsufficientPrecision("series vanishes to its known order");
  }
  bool is_exact_zero() const { return is_exact() && coeffs_.empty(); }
  bool is_monomial() const {
    if (!is_exact()) return false;
    std::size_t nz = 0;
    for (const auto& c : coeffs_) nz += is_zero(c) ? 0 : 1;
    return nz == 1;
  }

  Poly<R> to_poly() const { return Poly<R>(coeffs_); }

  TruncSeries truncated(std::size_t precision) const {
    return TruncSeries(coeffs_, std::min(precision, precision_));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    return combine(a, b, false);
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return combine(a, b, true);
  }
  friend TruncSeries operator-(const TruncSeries& a) {
    TruncSeries r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    std::size_t prec = kExact;
    if (!a.is_exact() || !b.is_exact()) {
      auto lowest = [](const TruncSeries& s) -> std::size_t {
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
          if (!is_zero(s.coeffs_[i])) return i;
        return s.is_exact() ? kExact : s.precision_;
      };
      const std::size_t va = lowest(a), vb = lowest(b);
      auto add = [](std::size_t x, std::size_t y) { return (x == kExact || y == kExact) ? kExact : x + y; };
      prec = std::min(a.is_exact() ? kExact : add(a.precision_, vb), b.is_exact() ? kExact : add(b.precision_, va));
    }
    if (a.coeffs_.empty() || b.coeffs_.empty()) return TruncSeries(std::vector<R>{}, prec);
    const std::size_t full = a.coeffs_.size() + b.coeffs_.size() - 1;
    const std::size_t n = std::min(full, prec);
    std::vector<R> out(n, ring_traits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncSeries(std::move(out), prec);
  }

  template <class S>
  TruncSeries scaled(const S& s) const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) {
      if constexpr (is_poly_v<R> && !std::is_same_v<S, R>)
        c = c.scaled(s);
      else
        c = R(c * s);
    }
    r.trim();
    return r;
  }

  // Multiply by the variable to the power k (k may be negative only if the
  // low coefficients vanish).
  TruncSeries shifted(long k) const {
    if (k >= 0) {
      std::vector<R> out(static_cast<std::size_t>(k), ring_traits<R>::zero());
      out.insert(out.end(), coeffs_.begin(), coeffs_.end());
      return TruncSeries(std::move(out), is_exact() ? kExact : precision_ + static_cast<std::size_t>(k));
    }
    const auto d = static_cast<std::size_t>(-k);
    if (!is_exact() && precision_ < d) throw InsufficientPrecision("shift below known order");
    for (std::size_t i = 0; i < std::min(d, coeffs_.size()); ++i)
      if (!is_zero(coeffs_[i])) throw InexactDivision("negative shift of a series with low terms");
    std::vector<R> out;
    if (coeffs_.size() > d) out.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(d), coeffs_.end());
    return TruncSeries(std::move(out), is_exact() ? kExact : precision_ - d);
  }

 private:
  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, bool subtract) {
    const std::size_t prec = std::min(a.precision_, b.precision_);
    std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), ring_traits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      if (subtract)
        out[i] -= b.coeffs_[i];
      else
        out[i] += b.coeffs_[i];
    }
    return TruncSeries(std::move(out), prec);
  }

  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  std::size_t precision_ = kExact;
};

using QSeries = TruncSeries<Rational>;

// Inverse of a series with invertible constant term, to the given order.
inline QSeries inverse(const QSeries& s, std::size_t order) {
  order = std::min(order, s.precision());
  if (is_zero(s[0])) throw InexactDivision("series inverse needs a nonzero constant term");
  std::vector<Rational> out(order);
  const Rational inv0 = 1 / s[0];
  for (std::size_t k = 0; k < order; ++k) {
    Rational acc = (k == 0) ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k && j < s.stored().size(); ++j) acc -= s.stored()[j] * out[k - j];
    out[k] = acc * inv0;
  }
  return QSeries(std::move(out), order);
}

// a / b as a power series. Exact when b is a monomial and a is exact;
// otherwise computed to min(precisions, order) after removing T^v(b).
inline QSeries divide(const QSeries& a, const QSeries& b, std::size_t order) {
  auto vb = b.valuation();
  if (!vb) throw InexactDivision("division by the zero series");
  const long m = static_cast<long>(*vb);
  if (b.is_monomial()) return a.shifted(-m).scaled(Rational(1 / b[*vb]));
  QSeries num = a.shifted(-m);
  QSeries den = b.shifted(-m);
  std::size_t prec = std::min({num.precision(), den.precision(), order});
  return (num.truncated(prec) * inverse(den, prec)).truncated(prec);
}

// (1 + u)^e for u of positive order, via the binomial series, to the given
// order. Works over any coefficient ring containing Q.
template <class R>
TruncSeries<R> binomial_power(const TruncSeries<R>& u, const Rational& e, std::size_t order) {
  order = std::min(order, u.precision());
  if (!u.stored().empty() && !is_zero(u.stored()[0]))
    throw InexactDivision("binomial series needs a series without constant term");
  TruncSeries<R> result(std::vector<R>{ring_traits<R>::one()}, order);
  TruncSeries<R> power(std::vector<R>{ring_traits<R>::one()}, order);
  for (std::size_t k = 1; k < order; ++k) {
    power = (power * u).truncated(order);
    if (power.stored().empty()) break;
    result = result + power.scaled(binomial(e, k));
  }
  return result.truncated(order);
}

// outer(inner(T)) for inner of positive order.
inline QSeries compose(const QSeries& outer, const QSeries& inner, std::size_t order) {
  order = std::min(order, outer.precision());
  QSeries result(std::vector<Rational>{}, order);
  QSeries power(std::vector<Rational>{Rational(1)}, order);
  for (std::size_t k = 0; k < order && k < outer.stored().size(); ++k) {
    if (k > 0) power = (power * inner).truncated(order);
    if (!is_zero(outer.stored()[k])) result = result + power.scaled(outer.stored()[k]);
  }
  return result.truncated(order);
}

// Compositional inverse of s = c1*T + c2*T^2 + ... with c1 != 0.
inline QSeries reversion(const QSeries& s, std::size_t order) {
  order = std::min(order, s.precision());
  if (!is_zero(s[0]) || is_zero(s[1])) throw InexactDivision("reversion needs order exactly one");
  const Rational inv1 = 1 / s[1];
  // r <- (T - (s(r) - c1*r)) / c1 gains one correct coefficient per pass.
  QSeries t(XPoly::monomial(Rational(1), 1), order);
  QSeries higher = s - QSeries(XPoly::monomial(s[1], 1));
  QSeries r = t.scaled(inv1);
  for (std::size_t pass = 0; pass < order; ++pass) r = (t - compose(higher, r, order)).scaled(inv1).truncated(order);
  return r;
}

// tau^shift * series, with coefficients known for exponents < shift + precision.
struct LaurentSeries {
  long shift = 0;
  QSeries series;

  long known_below() const {
    if (series.is_exact()) return std::numeric_limits<long>::max();
    return shift + static_cast<long>(series.precision());
  }
  Rational coefficient(long exponent) const {
    if (exponent < shift) return Rational(0);
    return series[static_cast<std::size_t>(exponent - shift)];
  }
  // Exponents with nonzero coefficient among the known ones.
  std::vector<long> support() const {
    std::vector<long> out;
    for (std::size_t i = 0; i < series.stored().size(); ++i)
      if (!is_zero(series.stored()[i])) out.push_back(shift + static_cast<long>(i));
    return out;
  }
};

}  // namespace approxroots
