#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "pqfib/gauss_hermite.hpp"

TEST(GaussHermite, SmallRulesClosedForm) {
  const auto r1 = pqfib::gauss_hermite_rule(1);
  EXPECT_NEAR(r1.nodes[0], 0.0, 1e-15);
  EXPECT_NEAR(r1.weights[0], std::sqrt(M_PI), 1e-14);
  const auto r2 = pqfib::gauss_hermite_rule(2);
  EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r2.weights[0], std::sqrt(M_PI) / 2, 1e-15);
  const auto r3 = pqfib::gauss_hermite_rule(3);
  EXPECT_NEAR(r3.nodes[2], std::sqrt(1.5), 1e-15);
  EXPECT_NEAR(r3.weights[1], 2 * std::sqrt(M_PI) / 3, 1e-15);
  EXPECT_THROW(pqfib::gauss_hermite_rule(0), std::invalid_argument);
}

TEST(GaussHermite, SymmetricSortedPositive) {
  for (int n : {5, 16, 64, 128, 200}) {
    const auto r = pqfib::gauss_hermite_rule(n);
    ASSERT_EQ(r.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      EXPECT_GT(r.weights[i], 0.0);
      EXPECT_EQ(r.nodes[i], -r.nodes[n - 1 - i]);
      if (i > 0) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    }
  }
}

TEST(GaussHermite, MomentsUpToFortyAtDefaultSize) {
  const auto r = pqfib::gauss_hermite_rule(128);
  for (int m = 0; m <= 20; ++m) {
    const double got = r.integrate([m](double u) { return std::pow(u, 2 * m); });
    const double want = std::tgamma(m + 0.5);
    EXPECT_LE(std::abs(got - want) / want, 1e-12) << "m=" << m;
    const double odd = r.integrate([m](double u) { return std::pow(u, 2 * m + 1); });
    EXPECT_NEAR(odd, 0.0, 1e-12 * want);
  }
}

TEST(GaussHermite, ExactForDegreeTwoNMinusOne) {
  // n = 10 integrates u^18 exactly but not u^20.
  const auto r = pqfib::gauss_hermite_rule(10);
  const double exact18 = std::tgamma(9.5);
  EXPECT_LE(std::abs(r.integrate([](double u) { return std::pow(u, 18); }) - exact18) / exact18, 1e-13);
  const double exact20 = std::tgamma(10.5);
  EXPECT_GT(std::abs(r.integrate([](double u) { return std::pow(u, 20); }) - exact20) / exact20, 1e-6);
}

TEST(GaussHermite, LongDoubleRule) {
  const auto r = pqfib::gauss_hermite_rule<long double>(40);
  const long double sum = std::accumulate(r.weights.begin(), r.weights.end(), 0.0L);
  EXPECT_NEAR(static_cast<double>(sum), std::sqrt(M_PI), 1e-15);
}
