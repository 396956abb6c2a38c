#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "approxroots/elimination.hpp"
#include "approxroots/errors.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/rational.hpp"

namespace approxroots {

// Branch given by X = T^n, Y = y(T).
struct Parameterization {
  long n = 1;
  XPoly y;

  // Exponents j with a_j != 0, ascending.
  std::vector<long> support() const {
    std::vector<long> out;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) out.push_back(static_cast<long>(j));
    return out;
  }

  void validate() const {
    if (n < 1) throw NotPrimitive("n must be at least 1");
    if (!is_zero(y[0])) throw NotLocal("y(T) has a constant term");
    long g = n;
    for (long j : support()) g = std::gcd(g, j);
    if (g != 1) throw NotPrimitive("gcd of n and the exponents of y is " + std::to_string(g));
  }

  friend bool operator==(const Parameterization&, const Parameterization&) = default;
};

// Characteristic sequence B, gcd sequence E, quotients N_k = E_{k-1}/E_k and
// semigroup generators Bbar. Entries may be negative for meromorphic curves.
struct CharData {
  std::vector<long> B;
  std::vector<long> E;
  std::vector<long> Nseq;
  std::vector<long> Bbar;
  long genus = 0;

  long degree() const { return B.empty() ? 0 : std::abs(B[0]); }

  friend bool operator==(const CharData&, const CharData&) = default;
};

// Completes E, N and Bbar from a characteristic sequence, using
//   Bbar_i = B_i + sum_{k=1}^{i-1} (E_{k-1} - E_k) / E_{i-1} * B_k.
inline CharData char_data_from_B(const std::vector<long>& b) {
  CharData cd;
  cd.B = b;
  cd.genus = static_cast<long>(b.size()) - 1;
  long e = 0;
  for (long x : b) {
    e = std::gcd(e, std::abs(x));
    cd.E.push_back(e);
  }
  for (std::size_t i = 1; i < cd.E.size(); ++i) cd.Nseq.push_back(cd.E[i - 1] / cd.E[i]);
  for (std::size_t i = 0; i < b.size(); ++i) {
    long v = b[i];
    for (std::size_t k = 1; k + 1 <= i; ++k) v += (cd.E[k - 1] - cd.E[k]) * (b[k] / cd.E[i - 1]);
    cd.Bbar.push_back(v);
  }
  return cd;
}

inline CharData char_sequence(const Parameterization& p) {
  p.validate();
  std::vector<long> b{p.n};
  long e = p.n;
  const auto supp = p.support();
  while (e > 1) {
    auto it = std::find_if(supp.begin(), supp.end(), [e](long j) { return j % e != 0; });
    b.push_back(*it);  // exists: the parameterization is primitive
    e = std::gcd(e, *it);
  }
  return char_data_from_B(b);
}

// Minimal polynomial of the branch: Res_T(T^n - X, y(T) - Y), monic in Y.
inline YPoly implicitize(const Parameterization& p) {
  p.validate();
  return eliminate_parameter(XPoly::monomial(Rational(1), static_cast<std::size_t>(p.n)), p.y);
}

// The k-truncation of the parameterization (terms of exponent < B_{k+1}),
// rewritten primitively with n / E_k.
inline Parameterization truncated_parameterization(const Parameterization& p, long k) {
  const CharData cd = char_sequence(p);
  if (k < 0 || k > cd.genus) throw IndexOutOfRange("k must lie in 0.." + std::to_string(cd.genus));
  if (k == cd.genus) return p;
  const long bound = cd.B[static_cast<std::size_t>(k) + 1];
  const long ek = cd.E[static_cast<std::size_t>(k)];
  std::vector<Rational> coeffs;
  for (long j : p.support()) {
    if (j >= bound) break;
    const auto idx = static_cast<std::size_t>(j / ek);
    if (coeffs.size() <= idx) coeffs.resize(idx + 1);
    coeffs[idx] = p.y[static_cast<std::size_t>(j)];
  }
  return Parameterization{p.n / ek, XPoly(std::move(coeffs))};
}

inline YPoly truncated_semiroot(const Parameterization& p, long k) {
  return implicitize(truncated_parameterization(p, k));
}

// Orders v_X(eta - zeta) over pairs of distinct conjugate roots. For a
// conjugation of order d the difference has order min{j : a_j != 0, d !| j}/n.
inline std::set<Rational> conjugate_difference_orders(const Parameterization& p) {
  p.validate();
  std::set<Rational> out;
  const auto supp = p.support();
  for (long d = 2; d <= p.n; ++d) {
    if (p.n % d != 0) continue;
    auto it = std::find_if(supp.begin(), supp.end(), [d](long j) { return j % d != 0; });
    if (it != supp.end()) out.insert(make_rational(*it, p.n));
  }
  return out;
}

// Largest v_X(eta - zeta) over roots eta of p and zeta of q. Both series are
// rewritten in t = X^(1/L), L = lcm(n_p, n_q); the conjugates of q are
// t -> w t for L-th roots of unity w. A rational coefficient equation
// a = b w^i can only hold when w^i = +-1, so the comparison is exact.
inline ExtRational coincidence_order(const Parameterization& p, const Parameterization& q) {
  p.validate();
  q.validate();
  const long L = std::lcm(p.n, q.n);
  std::map<long, std::pair<Rational, Rational>> coeffs;
  for (long j : p.support()) coeffs[j * (L / p.n)].first = p.y[static_cast<std::size_t>(j)];
  for (long j : q.support()) coeffs[j * (L / q.n)].second = q.y[static_cast<std::size_t>(j)];
  std::optional<long> best;
  bool infinite = false;
  for (long e = 0; e < L && !infinite; ++e) {
    std::optional<long> first_fail;
    for (const auto& [i, ab] : coeffs) {
      const auto& [a, b] = ab;
      const long r = (e * i) % L;
      bool ok;
      if (r == 0)
        ok = (a == b);
      else if (2 * r == L)
        ok = (a == -b);
      else
        ok = is_zero(a) && is_zero(b);
      if (!ok) {
        first_fail = i;
        break;
      }
    }
    if (!first_fail)
      infinite = true;
    else if (!best || *first_fail > *best)
      best = first_fail;
  }
  if (infinite) return ExtRational::infinity();
  return ExtRational(make_rational(*best, L));
}

// Intersection number (f, phi) from the characteristic data of f, the degree
// of an irreducible phi and their coincidence order K:
//   (f,phi)/d(phi) = Bbar_k/(N_1...N_{k-1}) + (N K - B_k)/(N_1...N_k),
// k the least index with K < B_{k+1}/N. For k = 0 this reads N K.
inline long noether_intersection(const CharData& cd, long dphi, const Rational& k_coincidence) {
  if (dphi < 1) throw InvalidCoincidence("degree of phi must be positive");
  if (sgn(k_coincidence) <= 0) throw InvalidCoincidence("coincidence order must be positive");
  const long n = cd.degree();
  std::size_t k = 0;
  while (static_cast<long>(k) < cd.genus && k_coincidence >= make_rational(cd.B[k + 1], n)) ++k;
  Rational ratio;
  if (k == 0) {
    ratio = Rational(n) * k_coincidence;
  } else {
    long before = 1;  // N_1 ... N_{k-1}
    for (std::size_t i = 0; i + 1 < k; ++i) before *= cd.Nseq[i];
    const long upto = before * cd.Nseq[k - 1];
    ratio = make_rational(cd.Bbar[k], before) + (Rational(n) * k_coincidence - Rational(cd.B[k])) / Rational(upto);
  }
  Rational value = ratio * Rational(dphi);
  if (!is_integer(value)) throw InvalidCoincidence("formula gives the non-integer " + value.get_str());
  return value.get_num().get_si();
}

// Elements of the numerical semigroup generated by gens, up to bound.
inline std::vector<long> semigroup_elements(const std::vector<long>& gens, long bound) {
  if (gens.empty()) throw IndexOutOfRange("semigroup needs at least one generator");
  for (long g : gens)
    if (g <= 0) throw IndexOutOfRange("semigroup generators must be positive");
  if (bound < 0) return {};
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
  member[0] = 1;
  for (long v = 1; v <= bound; ++v)
    for (long g : gens)
      if (g <= v && member[static_cast<std::size_t>(v - g)]) {
        member[static_cast<std::size_t>(v)] = 1;
        break;
      }
  std::vector<long> out;
  for (long v = 0; v <= bound; ++v)
    if (member[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

inline bool in_semigroup(const std::vector<long>& gens, long value) {
  if (value < 0) return false;
  const auto el = semigroup_elements(gens, value);
  return !el.empty() && el.back() == value;
}

// Characteristic sequence in coordinates whose first exponent is new_b0,
// from the generic sequence b (b_0 < b_1):
//   B_0 = b_0                 -> (b_0, ..., b_g)
//   B_0 = l b_0, 2<=l<=b_1/b_0 -> (l b_0, b_0, b_1 + (1-l) b_0, ..., b_g + (1-l) b_0)
//   B_0 = b_1                 -> (b_1, b_0, b_2 + b_0 - b_1, ..., b_g + b_0 - b_1)
inline CharData invert_coordinates(const CharData& generic, long new_b0) {
  const auto& b = generic.B;
  if (b.empty()) throw IllegalFirstExponent("empty characteristic sequence");
  if (b.size() > 1 && b[0] > b[1]) throw IllegalFirstExponent("input sequence is not generic");
  if (new_b0 == b[0]) return char_data_from_B(b);
  if (b.size() < 2) throw IllegalFirstExponent("a smooth branch admits only B0 = " + std::to_string(b[0]));
  std::vector<long> out;
  if (new_b0 % b[0] == 0 && new_b0 / b[0] >= 2 && new_b0 / b[0] <= b[1] / b[0]) {
    const long l = new_b0 / b[0];
    out = {new_b0, b[0]};
    for (std::size_t i = 1; i < b.size(); ++i) out.push_back(b[i] + (1 - l) * b[0]);
  } else if (new_b0 == b[1]) {
    out = {b[1], b[0]};
    for (std::size_t i = 2; i < b.size(); ++i) out.push_back(b[i] + b[0] - b[1]);
  } else {
    throw IllegalFirstExponent(std::to_string(new_b0) + " is not l*b0 (1<=l<=b1/b0) or b1");
  }
  return char_data_from_B(out);
}

// Inverse of invert_coordinates: the generic characteristic sequence of a
// branch from its sequence in arbitrary coordinates.
inline CharData to_generic(const CharData& cd) {
  const auto& b = cd.B;
  if (b.size() < 2 || b[0] < b[1]) return char_data_from_B(b);
  std::vector<long> out;
  if (b[0] % b[1] == 0) {
    const long l = b[0] / b[1];
    out = {b[1]};
    for (std::size_t i = 2; i < b.size(); ++i) out.push_back(b[i] + (l - 1) * b[1]);
  } else {
    out = {b[1], b[0]};
    for (std::size_t i = 2; i < b.size(); ++i) out.push_back(b[i] - b[1] + b[0]);
  }
  return char_data_from_B(out);
}

}  // namespace approxroots
