#include <gtest/gtest.h>

#include "approxroots/adic.hpp"
#include "approxroots/format.hpp"
#include "approxroots/parse.hpp"
#include "support.hpp"

using namespace approxroots;
using testing_support::Rng;
using testing_support::uniform;

namespace {

const YPoly kFex = parse_curve("Y^4 - 2X^3Y^2 - 4X^5Y + X^6 - X^7");
YPoly curve(const char* s) { return parse_curve(s); }

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// deg(P - Q^p), or nullopt when they are equal.
std::optional<std::size_t> defect(const YPoly& p, const YPoly& q, std::size_t root) {
  return (p - q.pow(root)).degree();
}

}  // namespace

TEST(QadicExpand, Examples) {
  auto e = qadic_expand(curve("Y^4"), curve("Y^2"));
  ASSERT_EQ(e.digits.size(), 3u);
  EXPECT_EQ(e.digits[0], curve("1"));
  EXPECT_TRUE(e.digits[1].is_zero());
  EXPECT_TRUE(e.digits[2].is_zero());

  e = qadic_expand(kFex, curve("Y^2"));
  EXPECT_EQ(e.digits, (std::vector<YPoly>{curve("1"), curve("-2X^3"), curve("-4X^5Y + X^6 - X^7")}));
  EXPECT_EQ(e.reassemble(), kFex);

  e = qadic_expand(kFex, curve("Y^2 - X^3"));
  EXPECT_EQ(e.digits, (std::vector<YPoly>{curve("1"), YPoly(), curve("-4X^5Y - X^7")}));
  EXPECT_EQ(e.reassemble(), kFex);
}

TEST(QadicExpand, RejectsNonMonic) {
  EXPECT_THROW(qadic_expand(curve("2Y^2"), curve("Y")), NonMonic);
  EXPECT_THROW(qadic_expand(kFex, curve("X*Y")), NonMonic);
}

TEST(QadicExpand, ReassemblyAndDigitBounds) {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const YPoly p = testing_support::random_monic(rng, static_cast<std::size_t>(uniform(rng, 1, 10)), 3);
    const YPoly q = testing_support::random_monic(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
    const auto e = qadic_expand(p, q);
    EXPECT_EQ(e.reassemble(), p);
    EXPECT_EQ(e.s, *p.degree() / *q.degree());
    EXPECT_TRUE(e.digits[0].is_monic());
    for (const auto& d : e.digits) EXPECT_TRUE(d.is_zero() || *d.degree() < *q.degree());
    EXPECT_EQ(e.digits[0] == curve("1"), *p.degree() % *q.degree() == 0);
  }
}

TEST(Tschirnhausen, Examples) {
  EXPECT_EQ(tschirnhausen(kFex, curve("Y^2")), curve("Y^2 - X^3"));
  EXPECT_EQ(tschirnhausen(kFex, curve("Y^2 - X^3")), curve("Y^2 - X^3"));
  // Q = Y against a degree-n polynomial gives Y + alpha_1/n.
  const YPoly p = curve("Y^3 + (X + 2X^2)Y^2 - X^5");
  EXPECT_EQ(tschirnhausen(p, curve("Y")), curve("Y + X/3 + 2X^2/3"));
  EXPECT_THROW(tschirnhausen(kFex, curve("Y^3")), DegreeMismatch);
}

TEST(ApproxRoot, WorkedExample) {
  EXPECT_EQ(approx_root_direct(kFex, 4), curve("Y"));
  EXPECT_EQ(approx_root_direct(kFex, 2), curve("Y^2 - X^3"));
  EXPECT_EQ(approx_root_direct(kFex, 1), kFex);
  EXPECT_EQ(approx_root_meromorphic(kFex, 2), curve("Y^2 - X^3"));
  EXPECT_EQ(approx_root_meromorphic(kFex, 4), curve("Y"));
  EXPECT_THROW(approx_root_direct(kFex, 3), DegreeMismatch);
}

TEST(ApproxRoot, IteratedFromSeeds) {
  const auto r = approx_root_iterated(kFex, 2, curve("Y^2"));
  EXPECT_EQ(r.root, curve("Y^2 - X^3"));
  EXPECT_EQ(r.iterations, 2u);
  EXPECT_EQ(approx_root_iterated(kFex, 2, curve("Y^2 + XY + X")).root, curve("Y^2 - X^3"));
  const YPoly p = curve("Y^3 + (X + 2X^2)Y^2 - X^5");
  EXPECT_EQ(approx_root_iterated(p, 3, curve("Y")).root, curve("Y + X/3 + 2X^2/3"));
}

TEST(ApproxRoot, PerfectSquare) {
  EXPECT_EQ(approx_root_meromorphic(curve("Y^2 + 2*5Y + 25"), 2), curve("Y + 5"));
  EXPECT_EQ(approx_root_direct(curve("Y^2 + 2*5Y + 25"), 2), curve("Y + 5"));
}

TEST(ApproxRoot, DefiningInequalityAndUniqueness) {
  Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 12));
    const YPoly p = testing_support::random_monic(rng, n, 2);
    for (std::size_t root : divisors(n)) {
      const YPoly q = approx_root_direct(p, root);
      const auto d = defect(p, q, root);
      EXPECT_TRUE(!d || *d < n - n / root);
      // Any other monic candidate of the same degree violates the inequality.
      const YPoly other = q + YPoly::monomial(testing_support::random_xpoly(rng, 2), static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n / root) - 1)));
      if (other != q) {
        const auto d2 = defect(p, other, root);
        EXPECT_TRUE(d2 && *d2 >= n - n / root);
      }
    }
  }
}

TEST(ApproxRoot, RootOfRoot) {
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 12));
    const YPoly p = testing_support::random_monic(rng, n, 2);
    for (std::size_t a : divisors(n))
      for (std::size_t b : divisors(n / a)) EXPECT_EQ(approx_root_direct(approx_root_direct(p, a), b), approx_root_direct(p, a * b));
  }
}

TEST(ApproxRoot, DependsOnlyOnLeadingCoefficients) {
  Rng rng(24);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 12));
    const YPoly p = testing_support::random_monic(rng, n, 2);
    for (std::size_t e : divisors(n)) {
      if (e == 1) continue;  // every coefficient matters
      // alpha_j for j > n/e sits at Y^(n-j) with n - j < n - n/e.
      const long j = uniform(rng, static_cast<long>(n / e) + 1, static_cast<long>(n));
      const YPoly perturbed = p + YPoly::monomial(testing_support::random_xpoly(rng, 3), n - static_cast<std::size_t>(j));
      EXPECT_EQ(approx_root_direct(perturbed, e), approx_root_direct(p, e));
    }
  }
}

TEST(ApproxRoot, ThreeMethodsAgree) {
  Rng rng(25);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 12));
    const YPoly p = testing_support::random_monic(rng, n, 3);
    for (std::size_t root : divisors(n)) {
      const YPoly direct = approx_root_direct(p, root);
      EXPECT_EQ(approx_root_meromorphic(p, root), direct);
      for (int s = 0; s < 3; ++s) {
        const YPoly seed = testing_support::random_monic(rng, n / root, 3);
        const auto it = approx_root_iterated(p, root, seed);
        EXPECT_EQ(it.root, direct);
        EXPECT_LE(it.iterations, n / root);
      }
    }
  }
}
