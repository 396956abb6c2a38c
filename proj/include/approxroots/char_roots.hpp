#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "approxroots/adic.hpp"
#include "approxroots/branch.hpp"
#include "approxroots/errors.hpp"
#include "approxroots/poly.hpp"
#include "approxroots/resultant.hpp"

namespace approxroots {

// Characteristic approximate roots f_k = sqrt[E_k](f) with the data they reveal.
struct RootsReport {
  std::vector<YPoly> roots;           // f_0 .. f_G
  CharData charData;
  std::vector<ExtInt> intersections;  // (f, f_k) = Bbar_{k+1}; infinite for k = G
};

namespace detail {

// f monic of positive degree with every non-leading coefficient vanishing at X = 0.
inline void check_local_curve(const YPoly& f) {
  if (f.is_zero() || !f.is_monic()) throw NonMonic("curve must be monic in Y");
  if (*f.degree() < 1) throw NotLocal("curve must have positive Y-degree");
  for (std::size_t i = 0; i < *f.degree(); ++i)
    if (!is_zero(f[i][0])) throw NotLocal("coefficients of f must vanish at X = 0");
}

}  // namespace detail

// Recovers the characteristic data of f from its approximate roots:
// f_0 = sqrt[N](f), Bbar_{k+1} = (f, f_k), E_{k+1} = gcd(E_k, Bbar_{k+1}),
// f_{k+1} = sqrt[E_{k+1}](f), until E reaches 1. The consistency checks are
// necessary conditions for irreducibility only.
inline RootsReport char_approx_roots(const YPoly& f) {
  detail::check_local_curve(f);
  const long n = static_cast<long>(*f.degree());
  RootsReport r;
  std::vector<long> e{n}, bbar{n};
  r.roots.push_back(approx_root_direct(f, static_cast<std::size_t>(n)));
  while (e.back() > 1) {
    const ExtInt meet = intersection_number(f, r.roots.back());
    if (meet.is_infinite())
      throw NotIrreducibleEvidence("(f, f_" + std::to_string(r.roots.size() - 1) + ") is infinite before E reached 1");
    const long next_bbar = static_cast<long>(meet.value());
    const long next_e = std::gcd(e.back(), next_bbar);
    if (next_e == e.back())
      throw NotIrreducibleEvidence("E does not drop at step " + std::to_string(e.size()) + " (Bbar = " +
                                   std::to_string(next_bbar) + ")");
    if (bbar.size() >= 2) {
      const long nk = e[e.size() - 2] / e.back();
      if (nk * bbar.back() >= next_bbar) throw NotIrreducibleEvidence("N_k Bbar_k >= Bbar_{k+1}");
    }
    r.intersections.push_back(meet);
    bbar.push_back(next_bbar);
    e.push_back(next_e);
    r.roots.push_back(approx_root_direct(f, static_cast<std::size_t>(next_e)));
  }
  r.intersections.push_back(ExtInt::infinity());  // f_G = f

  // B_1 = Bbar_1 and B_{k+1} = Bbar_{k+1} - N_k Bbar_k + B_k.
  std::vector<long> b{n};
  if (bbar.size() > 1) b.push_back(bbar[1]);
  for (std::size_t k = 1; k + 1 < bbar.size(); ++k) {
    const long nk = e[k - 1] / e[k];
    b.push_back(bbar[k + 1] - nk * bbar[k] + b[k]);
  }
  for (std::size_t i = 2; i < b.size(); ++i)
    if (b[i] <= b[i - 1]) throw NotIrreducibleEvidence("recovered B is not increasing");
  r.charData = char_data_from_B(b);
  if (r.charData.Bbar != bbar) throw NotIrreducibleEvidence("recovered B is inconsistent with Bbar");
  return r;
}

inline bool is_semiroot(const YPoly& f, const YPoly& q, long k) {
  const RootsReport r = char_approx_roots(f);
  if (k < 0 || k > r.charData.genus) throw IndexOutOfRange("k must lie in 0.." + std::to_string(r.charData.genus));
  const auto ku = static_cast<std::size_t>(k);
  const long want_degree = r.charData.degree() / r.charData.E[ku];
  if (q.is_zero() || !q.is_monic() || static_cast<long>(*q.degree()) != want_degree) return false;
  return intersection_number(f, q) == r.intersections[ku];
}

// Digits (i_0, ..., i_G) of a term c(X) q_0^{i_0} ... q_G^{i_G}.
using SemirootExpansion = std::map<std::vector<long>, XPoly>;

// Expands phi over q_0..q_G with 0 <= i_k < deg(q_{k+1})/deg(q_k) for k < G.
// The degrees must form a ladder 1 = d_0 | d_1 | ... | d_G, strictly increasing.
inline SemirootExpansion semiroot_expand(const YPoly& phi, const std::vector<YPoly>& roots) {
  if (roots.empty()) throw DegreeLadderInvalid("no roots given");
  std::vector<std::size_t> deg;
  for (const auto& q : roots) {
    if (q.is_zero() || !q.is_monic()) throw DegreeLadderInvalid("roots must be monic");
    deg.push_back(*q.degree());
  }
  if (deg[0] != 1) throw DegreeLadderInvalid("q_0 must have degree 1");
  for (std::size_t k = 1; k < deg.size(); ++k)
    if (deg[k] <= deg[k - 1] || deg[k] % deg[k - 1] != 0)
      throw DegreeLadderInvalid("deg q_" + std::to_string(k - 1) + " must properly divide deg q_" + std::to_string(k));

  SemirootExpansion out;
  std::vector<long> digits(roots.size(), 0);
  // Peels off q_level, then recurses into the digits with the next lower root.
  auto rec = [&](auto&& self, const YPoly& part, std::size_t level) -> void {
    if (part.is_zero()) return;
    const AdicExpansion e = adic_digits(part, roots[level]);
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
      digits[level] = static_cast<long>(e.s - i);
      if (level == 0) {
        if (!e.digits[i].is_zero()) out[digits] = e.digits[i][0];
      } else {
        self(self, e.digits[i], level - 1);
      }
    }
    digits[level] = 0;
  };
  rec(rec, phi, roots.size() - 1);
  return out;
}

// (f, phi) as the minimum over expansion terms of v_X(c) N + sum i_k Bbar_{k+1}.
// Terms carrying a positive power of f itself are divisible by f and skipped.
inline ExtInt intersection_via_expansion(const YPoly& f, const YPoly& phi) {
  const RootsReport r = char_approx_roots(f);
  const auto& cd = r.charData;
  const auto g = static_cast<std::size_t>(cd.genus);
  ExtInt best = ExtInt::infinity();
  for (const auto& [digits, c] : semiroot_expand(phi, r.roots)) {
    if (digits[g] > 0) continue;
    std::int64_t value = static_cast<std::int64_t>(*c.valuation()) * cd.degree();
    for (std::size_t k = 0; k < g; ++k) value += digits[k] * cd.Bbar[k + 1];
    if (ExtInt(value) < best) best = value;
  }
  return best;
}

// Whether q (irreducible, degree N/E_k) shares its k-truncations with f, i.e.
// K(f, q) >= B_{k+1}/N. Noether's formula is increasing in K, so this is
// (f, q) >= d(q) Bbar_{k+1} E_k / N, the value at K = B_{k+1}/N.
inline bool truncation_coincidence(const YPoly& f, const YPoly& q, long k) {
  const RootsReport r = char_approx_roots(f);
  const auto& cd = r.charData;
  if (k < 0 || k > cd.genus) throw IndexOutOfRange("k must lie in 0.." + std::to_string(cd.genus));
  if (q.is_zero() || !q.is_monic()) throw NonMonic("q must be monic");
  const auto ku = static_cast<std::size_t>(k);
  const long dq = static_cast<long>(*q.degree());
  if (dq != cd.degree() / cd.E[ku]) throw DegreeMismatch("deg q must be N/E_k");
  const ExtInt meet = intersection_number(f, q);
  if (k == cd.genus) return meet.is_infinite();
  if (meet.is_infinite()) return true;
  return meet.value() * cd.degree() >= static_cast<std::int64_t>(cd.Bbar[ku + 1]) * cd.E[ku] * dq;
}

}  // namespace approxroots
