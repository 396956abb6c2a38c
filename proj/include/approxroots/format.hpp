#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "approxroots/poly.hpp"
#include "approxroots/rational.hpp"

namespace approxroots {

namespace detail {

struct Term {
  Rational coeff;
  std::string monomial;  // empty for the constant monomial
};

inline std::string power(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

inline std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const bool negative = sgn(t.coeff) < 0;
    const Rational mag = abs(t.coeff);
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.monomial.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.monomial;
    } else {
      out += mag.get_str() + "*" + t.monomial;
    }
  }
  return out;
}

}  // namespace detail

// Canonical text of a univariate polynomial, ascending exponents.
inline std::string to_string(const XPoly& p, const std::string& var = "X") {
  std::vector<detail::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!is_zero(p[i])) terms.push_back({p[i], detail::power(var, i)});
  return detail::join_terms(terms);
}

// Canonical text of a bivariate polynomial: descending powers of Y and,
// within one power of Y, ascending powers of X. Parsing the output gives
// back the same polynomial.
inline std::string to_string(const YPoly& p, const std::string& xvar = "X", const std::string& yvar = "Y") {
  std::vector<detail::Term> terms;
  for (std::size_t j = p.size(); j-- > 0;) {
    const XPoly& c = p[j];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (is_zero(c[i])) continue;
      std::string mono = detail::power(xvar, i);
      const std::string ypart = detail::power(yvar, j);
      if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
      terms.push_back({c[i], mono});
    }
  }
  return detail::join_terms(terms);
}

inline std::ostream& operator<<(std::ostream& os, const YPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << to_string(p); }

}  // namespace approxroots
