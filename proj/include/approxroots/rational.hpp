#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace approxroots {

// mpq_class keeps numerator/denominator canonical (gcd 1, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Exact k-th root of an integer, if one exists.
inline std::optional<Integer> integer_root(const Integer& x, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (sgn(x) < 0 && k % 2 == 0) return std::nullopt;
  Integer a = abs(x);
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  if (sgn(x) < 0) r = -r;
  return r;
}

// Exact k-th root of a rational. For even k the positive root is returned.
inline std::optional<Rational> rational_root(const Rational& x, unsigned long k) {
  auto num = integer_root(x.get_num(), k);
  auto den = integer_root(x.get_den(), k);
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

// Generalized binomial coefficient binom(a, k) for rational a.
inline Rational binomial(const Rational& a, unsigned long k) {
  Rational r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= (a - Rational(static_cast<long>(i)));
    r /= Rational(static_cast<long>(i + 1));
  }
  return r;
}

// A value of T extended with +infinity. Used for valuations, intersection
// numbers and coincidence orders, which are infinite exactly when the two
// objects being compared coincide.
template <class T>
class Extended {
 public:
  Extended() = default;
  Extended(T v) : value_(std::move(v)) {}  // NOLINT: implicit on purpose
  static Extended infinity() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const T& value() const { return *value_; }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }
  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Extended(*a.value_ + *b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Extended& e) {
    if (e.is_infinite()) return os << "INFINITY";
    return os << *e.value_;
  }

 private:
  std::optional<T> value_;
};

using ExtInt = Extended<std::int64_t>;
using ExtRational = Extended<Rational>;

}  // namespace approxroots
