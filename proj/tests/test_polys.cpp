#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pcfosc/polys.hpp"

using pcfosc::BigInt;
using pcfosc::PolyZ;

TEST(PolyZ, ZeroPolynomialHasNoCoefficients) {
  const PolyZ zero{0, 0, 0};
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_EQ(zero, PolyZ{});
  EXPECT_THROW(zero.leading(), pcfosc::domain_error);
}

TEST(PolyZ, TrailingZerosAreTrimmed) {
  const PolyZ p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading(), 2);
}

TEST(PolyZ, Eval) {
  EXPECT_EQ(pcfosc::poly_eval(PolyZ{}, 7.0), 0.0);
  EXPECT_EQ(pcfosc::poly_eval(PolyZ{-2, 0, 4}, 0.0), -2.0);
  EXPECT_EQ(pcfosc::poly_eval(PolyZ{0, 2}, 3.0), 6.0);
}

TEST(PolyZ, Derivative) {
  EXPECT_EQ(pcfosc::poly_derivative(PolyZ{0, 0, 1}), (PolyZ{0, 2}));
  EXPECT_TRUE(pcfosc::poly_derivative(PolyZ{5}).is_zero());
  EXPECT_EQ(pcfosc::poly_derivative(PolyZ{0, -12, 0, 8}), (PolyZ{-12, 0, 24}));
}

TEST(PolyZ, ArithmeticAndFormatting) {
  const PolyZ a{1, 1};
  EXPECT_EQ(a * a, (PolyZ{1, 2, 1}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.reflected(), (PolyZ{1, -1}));
  EXPECT_EQ((PolyZ{3, 0, -6, 0, 1}).to_string("z"), "z^4 - 6 z^2 + 3");
  EXPECT_EQ((PolyZ{0, -1}).to_string("z"), "-z");
  EXPECT_EQ(PolyZ{}.to_string(), "0");
}

TEST(PolyZ, DerivativeMatchesCentralDifference) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> degree(0, 10);
  std::uniform_real_distribution<double> point(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> c(degree(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    const PolyZ p(c);
    const PolyZ dp = p.derivative();
    const double t = point(rng);
    const double h = 1e-5;
    const double fd = (p(t + h) - p(t - h)) / (2 * h);
    const double exact = dp(t);
    EXPECT_LE(std::fabs(fd - exact), 1e-6 * std::max(1.0, std::fabs(exact))) << "trial " << trial << " t=" << t;
  }
}

TEST(Hermite, RecurrenceExamples) {
  EXPECT_EQ(pcfosc::hermite_recurrence(0), PolyZ{1});
  EXPECT_EQ(pcfosc::hermite_recurrence(2), (PolyZ{-2, 0, 4}));
  EXPECT_EQ(pcfosc::hermite_recurrence(3), (PolyZ{0, -12, 0, 8}));
}

TEST(Hermite, RodriguesExamples) {
  EXPECT_EQ(pcfosc::hermite_rodrigues(0), PolyZ{1});
  EXPECT_EQ(pcfosc::hermite_rodrigues(1), (PolyZ{0, 2}));
  EXPECT_EQ(pcfosc::hermite_rodrigues(4), (PolyZ{12, 0, -48, 0, 16}));
}

TEST(Hermite, BothRoutesMatchExplicitSumUpTo50) {
  for (unsigned n = 0; n <= 50; ++n) {
    const PolyZ expected = oracle::hermite_explicit(n);
    EXPECT_EQ(pcfosc::hermite_recurrence(n), expected) << "n=" << n;
    EXPECT_EQ(pcfosc::hermite_rodrigues(n), expected) << "n=" << n;
  }
}

TEST(Hermite, DegreeLeadingCoefficientParity) {
  for (unsigned n = 0; n <= 60; ++n) {
    const PolyZ h = pcfosc::hermite_recurrence(n);
    EXPECT_EQ(h.degree(), static_cast<long>(n));
    EXPECT_EQ(h.leading(), BigInt(1) << n);
    EXPECT_EQ(h.reflected(), (n % 2 == 0) ? h : -h);
  }
}

TEST(Hermite, BeyondSixtyFourBits) {
  const PolyZ h50 = pcfosc::hermite_recurrence(50);
  // |H_50(0)| = 50! / 25!
  EXPECT_EQ(h50.coeff(0), -(oracle::factorial(50) / oracle::factorial(25)));
  EXPECT_GT(h50.coeff(0) * h50.coeff(0), BigInt(1) << 128);
}

TEST(Hermite, DegreeCap) {
  EXPECT_NO_THROW(pcfosc::hermite_recurrence(200));
  EXPECT_THROW(pcfosc::hermite_recurrence(201), pcfosc::parameter_error);
  EXPECT_THROW(pcfosc::hermite_rodrigues(201), pcfosc::parameter_error);
  EXPECT_THROW(pcfosc::hermite_recurrence(11, 10), pcfosc::parameter_error);
  EXPECT_NO_THROW(pcfosc::hermite_recurrence(250, 300));
}
