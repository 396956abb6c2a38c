#include <gtest/gtest.h>

#include "approxroots/char_roots.hpp"
#include "approxroots/format.hpp"
#include "approxroots/parse.hpp"
#include "support.hpp"

using namespace approxroots;
using testing_support::Rng;
using testing_support::uniform;

namespace {

const YPoly kFex = parse_curve("Y^4 - 2X^3Y^2 - 4X^5Y + X^6 - X^7");
YPoly curve(const char* s) { return parse_curve(s); }

// A k-semiroot built from the k-truncation plus terms of order above B_{k+1}.
YPoly perturbed_semiroot(Rng& rng, const Parameterization& p, const CharData& cd, long k) {
  Parameterization t = truncated_parameterization(p, k);
  const long ek = cd.E[static_cast<std::size_t>(k)];
  const long first = cd.B[static_cast<std::size_t>(k) + 1] / ek + 1;
  for (int extra = uniform(rng, 0, 2); extra > 0; --extra)
    t.y += XPoly::monomial(testing_support::small_rational(rng, true), static_cast<std::size_t>(uniform(rng, first, first + 4)));
  return implicitize(t);
}

}  // namespace

TEST(CharApproxRoots, WorkedExample) {
  const RootsReport r = char_approx_roots(kFex);
  EXPECT_EQ(r.roots, (std::vector<YPoly>{curve("Y"), curve("Y^2 - X^3"), kFex}));
  EXPECT_EQ(r.charData.B, (std::vector<long>{4, 6, 7}));
  EXPECT_EQ(r.charData.E, (std::vector<long>{4, 2, 1}));
  EXPECT_EQ(r.charData.Bbar, (std::vector<long>{4, 6, 13}));
  EXPECT_EQ(r.intersections, (std::vector<ExtInt>{6, 13, ExtInt::infinity()}));
}

TEST(CharApproxRoots, Cusp) {
  const RootsReport r = char_approx_roots(curve("Y^2 - X^3"));
  EXPECT_EQ(r.roots, (std::vector<YPoly>{curve("Y"), curve("Y^2 - X^3")}));
  EXPECT_EQ(r.charData.B, (std::vector<long>{2, 3}));
}

TEST(CharApproxRoots, ReducibleInputsAreRejected) {
  EXPECT_THROW(char_approx_roots(curve("Y^2 - X^2")), NotIrreducibleEvidence);
  EXPECT_THROW(char_approx_roots(curve("(Y^2 - X^3)(Y^2 + X^3)")), NotIrreducibleEvidence);
  EXPECT_THROW(char_approx_roots(curve("Y^2 - X^3 + 1")), NotLocal);
  EXPECT_THROW(char_approx_roots(curve("2Y^2 - X^3")), NonMonic);
}

TEST(CharApproxRoots, RoundTripThroughImplicitization) {
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const auto p = testing_support::random_parameterization(rng, uniform(rng, 1, 7), i % 4 == 0);
    const CharData expected = char_sequence(p);
    const RootsReport r = char_approx_roots(implicitize(p));
    EXPECT_EQ(r.charData, expected) << "n=" << p.n << " y=" << to_string(p.y, "T");
    for (std::size_t k = 0; k < r.roots.size(); ++k) {
      EXPECT_EQ(static_cast<long>(*r.roots[k].degree()), p.n / expected.E[k]);
      EXPECT_EQ(r.roots[k], approx_root_direct(implicitize(p), static_cast<std::size_t>(expected.E[k])));
    }
  }
}

TEST(CharApproxRoots, RootsCarryTheirOwnTruncatedData) {
  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const auto p = testing_support::random_parameterization(rng, uniform(rng, 2, 8));
    const RootsReport r = char_approx_roots(implicitize(p));
    const auto& cd = r.charData;
    for (long k = 1; k <= cd.genus; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      std::vector<long> expected;
      for (std::size_t i2 = 0; i2 <= ku; ++i2) expected.push_back(cd.B[i2] / cd.E[ku]);
      EXPECT_EQ(char_approx_roots(r.roots[ku]).charData.B, expected);
    }
  }
}

TEST(IsSemiroot, Examples) {
  EXPECT_TRUE(is_semiroot(kFex, curve("Y"), 0));
  EXPECT_TRUE(is_semiroot(kFex, curve("Y^2 - X^3 - 2X^4 - X^5"), 1));
  EXPECT_FALSE(is_semiroot(kFex, curve("Y^2"), 1));
  EXPECT_FALSE(is_semiroot(kFex, curve("Y^3"), 1));
  EXPECT_THROW(is_semiroot(kFex, curve("Y"), 3), IndexOutOfRange);
}

TEST(SemirootExpand, Examples) {
  const std::vector<YPoly> roots{curve("Y"), curve("Y^2 - X^3"), kFex};
  EXPECT_EQ(semiroot_expand(kFex, roots), (SemirootExpansion{{{0, 0, 1}, XPoly(Rational(1))}}));
  EXPECT_EQ(semiroot_expand(curve("Y^3"), roots),
            (SemirootExpansion{{{1, 1, 0}, XPoly(Rational(1))}, {{1, 0, 0}, XPoly::monomial(Rational(1), 3)}}));
  EXPECT_EQ(semiroot_expand(curve("2 + X"), roots), (SemirootExpansion{{{0, 0, 0}, curve("2 + X")[0]}}));
  EXPECT_THROW(semiroot_expand(kFex, {curve("Y"), curve("Y^3"), kFex}), DegreeLadderInvalid);
  EXPECT_THROW(semiroot_expand(kFex, {curve("Y^2"), kFex}), DegreeLadderInvalid);
}

TEST(SemirootExpand, ReassemblyDigitsAndDistinctDegrees) {
  Rng rng(43);
  const std::vector<YPoly> roots{curve("Y"), curve("Y^2 - X^3"), kFex};
  for (int i = 0; i < 50; ++i) {
    const YPoly phi = testing_support::random_monic(rng, static_cast<std::size_t>(uniform(rng, 0, 9)), 4);
    const auto terms = semiroot_expand(phi, roots);
    YPoly back;
    std::set<std::size_t> degrees;
    for (const auto& [digits, c] : terms) {
      EXPECT_LT(digits[0], 2);
      EXPECT_LT(digits[1], 2);
      YPoly term{c};
      for (std::size_t k = 0; k < digits.size(); ++k) term *= roots[k].pow(static_cast<unsigned long>(digits[k]));
      back += term;
      EXPECT_TRUE(degrees.insert(static_cast<std::size_t>(digits[0] + 2 * digits[1] + 4 * digits[2])).second);
    }
    EXPECT_EQ(back, phi);
  }
}

TEST(IntersectionViaExpansion, Examples) {
  EXPECT_EQ(intersection_via_expansion(kFex, curve("Y^3")), ExtInt(18));
  EXPECT_EQ(intersection_via_expansion(kFex, curve("X*Y")), ExtInt(10));
  EXPECT_EQ(intersection_via_expansion(kFex, curve("Y^2 - X^3")), ExtInt(13));
  EXPECT_TRUE(intersection_via_expansion(kFex, kFex * curve("Y + 1")).is_infinite());
}

TEST(IntersectionViaExpansion, AgreesWithResultants) {
  Rng rng(44);
  const std::vector<YPoly> curves{kFex, implicitize(parse_parameterization("4; T^6 + T^9 + T^11")),
                                  implicitize(parse_parameterization("3; T^4 - 2T^5"))};
  for (int i = 0; i < 100; ++i) {
    const YPoly& f = curves[static_cast<std::size_t>(i) % curves.size()];
    const std::size_t d = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(*f.degree()) + 2));
    YPoly phi = testing_support::random_monic(rng, d, 5);
    if (uniform(rng, 0, 1) == 0) phi -= YPoly(XPoly(phi[0][0]));
    EXPECT_EQ(intersection_via_expansion(f, phi), intersection_number(f, phi)) << to_string(phi);
  }
}

TEST(TruncationCoincidence, Examples) {
  EXPECT_TRUE(truncation_coincidence(kFex, curve("Y^2 - X^3"), 1));
  EXPECT_TRUE(truncation_coincidence(kFex, curve("Y"), 0));
  EXPECT_FALSE(truncation_coincidence(kFex, curve("Y^2 - X^4"), 1));
  EXPECT_TRUE(truncation_coincidence(kFex, kFex, 2));
  EXPECT_THROW(truncation_coincidence(kFex, curve("Y^3"), 1), DegreeMismatch);
}

TEST(TruncationCoincidence, MatchesCoincidenceOrders) {
  Rng rng(45);
  for (int i = 0; i < 20; ++i) {
    const auto p = testing_support::random_parameterization(rng, uniform(rng, 2, 6));
    const CharData cd = char_sequence(p);
    const YPoly f = implicitize(p);
    const long k = uniform(rng, 0, cd.genus - 1);
    Parameterization q = truncated_parameterization(p, k);
    // Sometimes disturb below B_{k+1} so that the truncations differ.
    if (i % 2 == 1) q.y += XPoly::monomial(Rational(1), static_cast<std::size_t>(uniform(rng, 1, std::max(1L, static_cast<long>(q.y.size())))));
    try {
      q.validate();
    } catch (const Error&) {
      continue;
    }
    if (q.n != p.n / cd.E[static_cast<std::size_t>(k)]) continue;
    const bool expected = coincidence_order(p, q) >= ExtRational(make_rational(cd.B[static_cast<std::size_t>(k) + 1], p.n));
    EXPECT_EQ(truncation_coincidence(f, implicitize(q), k), expected);
  }
}

TEST(Semiroots, TschirnhausenKeepsSemiroots) {
  Rng rng(46);
  int checked = 0;
  while (checked < 20) {
    const auto p = testing_support::random_parameterization(rng, uniform(rng, 4, 8));
    const CharData cd = char_sequence(p);
    if (cd.genus < 2) continue;
    const YPoly f = implicitize(p);
    const long k = uniform(rng, 1, cd.genus - 1);
    const YPoly phi = perturbed_semiroot(rng, p, cd, k);
    const YPoly psi = perturbed_semiroot(rng, p, cd, k - 1);
    ASSERT_TRUE(is_semiroot(f, phi, k));
    ASSERT_TRUE(is_semiroot(f, psi, k - 1));
    EXPECT_TRUE(is_semiroot(f, tschirnhausen(phi, psi), k - 1));
    ++checked;
  }
}

TEST(Semiroots, LowDegreeValuesLieInSubsemigroup) {
  Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    const auto p = testing_support::random_parameterization(rng, uniform(rng, 2, 8));
    const RootsReport r = char_approx_roots(implicitize(p));
    const auto& cd = r.charData;
    const long k = uniform(rng, 0, cd.genus - 1);
    const long d = uniform(rng, 1, std::max(1L, cd.degree() / cd.E[static_cast<std::size_t>(k)] - 1));
    YPoly phi = testing_support::random_monic(rng, static_cast<std::size_t>(d), 4);
    phi -= YPoly(XPoly(phi[0][0]));
    const ExtInt meet = intersection_number(implicitize(p), phi);
    ASSERT_TRUE(meet.is_finite());
    const std::vector<long> gens(cd.Bbar.begin(), cd.Bbar.begin() + k + 1);
    if (d < cd.degree() / cd.E[static_cast<std::size_t>(k)]) EXPECT_TRUE(in_semigroup(gens, meet.value()));
  }
}
