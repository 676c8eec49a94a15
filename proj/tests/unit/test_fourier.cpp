#include <gtest/gtest.h>

#include <cmath>

#include "pqfib/fourier.hpp"

using pqfib::Family;
using pqfib::FourierParams;
using cd = std::complex<double>;

namespace {

const pqfib::QuadratureRule<double>& rule() {
  static const auto r = pqfib::gauss_hermite_rule(pqfib::kDefaultQuadratureNodes);
  return r;
}

double rel(cd a, cd b) { return std::abs(a - b) / (std::abs(b) + 1e-30); }

}  // namespace

TEST(FourierParams, DerivedQAndValidation) {
  const FourierParams<double> fp(1.5, 0.3, 1.0, 0.5, 2);
  EXPECT_NEAR(fp.q(), std::exp(-0.18) / 1.5, 1e-16);
  EXPECT_NEAR(fp.params().pq(), std::exp(-0.18), 1e-16);
  EXPECT_THROW(FourierParams<double>(0.0, 0.3, 1.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(FourierParams<double>(-1.0, 0.3, 1.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(FourierParams<double>(1.0, 0.0, 1.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(FourierParams<double>(1.0, 0.3, 1.0, 1.0, -1), std::invalid_argument);
}

TEST(WeightedQuadrature, GaussianTransformExamples) {
  auto one = [](double) { return cd(1.0); };
  EXPECT_NEAR(std::abs(pqfib::weighted_fourier_quadrature(one, 0.0, rule()) - cd(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(pqfib::weighted_fourier_quadrature(one, 1.0, rule()) - cd(std::exp(-0.5))), 0.0, 1e-14);
  auto wave = [](double x) { return std::polar(1.0, 0.3 * x); };
  EXPECT_NEAR(std::abs(pqfib::weighted_fourier_quadrature(wave, 0.5, rule()) - cd(std::exp(-0.32))), 0.0, 1e-14);
}

TEST(FibonacciTransform, Examples) {
  for (double y : {-1.5, 0.0, 2.0}) {
    const FourierParams<double> fp0(1.1, 0.2, 1.0, 0.5, 0);
    EXPECT_NEAR(std::abs(pqfib::fibonacci_transform_lhs(fp0, y, rule()) - std::exp(-y * y / 2)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(pqfib::fibonacci_transform_analytic(fp0, y) - std::exp(-y * y / 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(pqfib::fibonacci_transform_rhs(fp0, y) - std::exp(-y * y / 2)), 0.0, 1e-15);
  }
  const FourierParams<double> fp1(1.5, 0.3, 1.0, 1.0, 1);
  const double e = std::exp(-0.045);
  EXPECT_NEAR(std::abs(pqfib::fibonacci_transform_lhs(fp1, 0.0, rule()) - e), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(pqfib::fibonacci_transform_rhs(fp1, 0.0) - e), 0.0, 1e-14);
  // n = 2: exp(-(2 kappa)^2 / 2) + pq
  const FourierParams<double> fp2(1.5, 0.3, 1.0, 1.0, 2);
  EXPECT_NEAR(std::abs(pqfib::fibonacci_transform_analytic(fp2, 0.0) - (std::exp(-0.18) + std::exp(-0.18))), 0.0,
              1e-15);
}

TEST(FibonacciTransform, TheoremSweep) {
  for (double p : {1.1, 1.5}) {
    for (double kappa : {0.2, 0.3}) {
      for (double s : {0.5, 1.0}) {
        for (int n = 0; n <= 8; ++n) {
          const FourierParams<double> fp(p, kappa, 1.0, s, n);
          for (double y : pqfib::default_y_grid<double>()) {
            const cd lhs = pqfib::fibonacci_transform_lhs(fp, y, rule());
            EXPECT_LE(rel(lhs, pqfib::fibonacci_transform_rhs(fp, y)), 1e-8);
            EXPECT_LE(std::abs(lhs - pqfib::fibonacci_transform_analytic(fp, y)), 1e-10);
          }
        }
      }
    }
  }
}

TEST(LucasTransform, SmallNExamples) {
  const FourierParams<double> fp0(1.1, 0.2, 1.0, 0.5, 0);
  EXPECT_NEAR(std::abs(pqfib::lucas_transform_lhs(fp0, 0.7, rule()) - std::exp(-0.245)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(pqfib::lucas_transform_rhs(fp0, 0.7) - std::exp(-0.245)), 0.0, 1e-15);
  const FourierParams<double> fp1(1.5, 0.3, 1.0, 1.0, 1);
  EXPECT_NEAR(std::abs(pqfib::lucas_transform_rhs(fp1, 0.4) - pqfib::fibonacci_transform_rhs(fp1, 0.4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(pqfib::lucas_transform_lhs(fp1, 0.4, rule()) - pqfib::fibonacci_transform_lhs(fp1, 0.4, rule())),
              0.0, 1e-15);
}

TEST(LucasTransform, UnscaledRightHandSideMatchesSweep) {
  for (double p : {1.0, 1.1, 1.5}) {
    for (double kappa : {0.2, 0.3}) {
      for (double s : {0.5, 1.0}) {
        for (int n = 0; n <= 8; ++n) {
          const FourierParams<double> fp(p, kappa, 1.0, s, n);
          for (double y : pqfib::default_y_grid<double>()) {
            const cd lhs = pqfib::lucas_transform_lhs(fp, y, rule());
            EXPECT_LE(rel(lhs, pqfib::lucas_transform_rhs_unscaled(fp, y)), 1e-8);
            EXPECT_LE(std::abs(lhs - pqfib::lucas_transform_analytic(fp, y)), 1e-10);
          }
        }
      }
    }
  }
}

TEST(LucasTransform, AsWrittenOffByPowersOfPq) {
  // At n = 2 the s-term carries an extra (pq)^{-1}.
  const FourierParams<double> fp(1.5, 0.3, 1.0, 1.0, 2);
  EXPECT_GT(rel(pqfib::lucas_transform_lhs(fp, 0.0, rule()), pqfib::lucas_transform_rhs(fp, 0.0)), 1e-3);
}

TEST(Recovery, MatchesDirectEvaluation) {
  for (double p : {1.1, 1.5}) {
    for (double kappa : {0.2, 0.3}) {
      for (double s : {0.5, 1.0}) {
        for (double a : {1.0, 0.8}) {
          for (int n = 0; n <= 6; ++n) {
            const FourierParams<double> fp(p, kappa, a, s, n);
            for (Family fam : {Family::fibonacci, Family::lucas}) {
              const double direct = pqfib::transform_direct_value(fam, fp);
              for (auto src : {pqfib::RecoverySource::analytic_lhs, pqfib::RecoverySource::rhs}) {
                const cd got = pqfib::recovery_double_integral(fam, fp, rule(), src);
                EXPECT_LE(std::abs(got - direct) / std::abs(direct), 1e-8);
                EXPECT_EQ(got.imag(), 0.0);
              }
            }
          }
        }
      }
    }
  }
  const FourierParams<double> fp0(1.1, 0.2, 1.0, 0.5, 0);
  EXPECT_NEAR(pqfib::recovery_double_integral(Family::fibonacci, fp0, rule()).real(), 1.0, 1e-14);
}

TEST(Transform, ArbitraryAmplitude) {
  const FourierParams<double> fp(1.2, 0.25, 0.6, 0.8, 5);
  for (double y : {-2.0, 0.5, 3.0}) {
    EXPECT_LE(rel(pqfib::fibonacci_transform_lhs(fp, y, rule()), pqfib::fibonacci_transform_rhs(fp, y)), 1e-8);
  }
}

TEST(Transform, DefaultGrid) {
  const auto ys = pqfib::default_y_grid<double>();
  ASSERT_EQ(ys.size(), 13u);
  EXPECT_EQ(ys.front(), -3.0);
  EXPECT_EQ(ys.back(), 3.0);
  EXPECT_EQ(ys[6], 0.0);
}
