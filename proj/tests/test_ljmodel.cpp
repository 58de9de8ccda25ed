#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pcfosc/ljmodel.hpp"

using pcfosc::LJSpec;

namespace {
const double kR6 = 1.12246204830937298;  // 2^{1/6}
}

TEST(LJSpec, Validation) {
  EXPECT_THROW(LJSpec(0.0, 1.0, 1), pcfosc::parameter_error);
  EXPECT_THROW(LJSpec(1.0, -1.0, 1), pcfosc::parameter_error);
  EXPECT_THROW(LJSpec(1.0, 1.0, 0), pcfosc::parameter_error);
}

TEST(LJPotential, Values) {
  const LJSpec s(1.0, 1.0);
  EXPECT_EQ(pcfosc::lj_potential(1.0, s), 0.0);
  EXPECT_NEAR(pcfosc::lj_potential(kR6, s), -1.0, 1e-15);
  EXPECT_NEAR(pcfosc::lj_potential(2.0, s), -0.0615234375, 1e-16);
  EXPECT_NEAR(pcfosc::lj_potential(3.2 * kR6, LJSpec(2.5, 3.2)), -2.5, 1e-14);
  EXPECT_THROW(pcfosc::lj_potential(0.0, s), pcfosc::domain_error);
  EXPECT_THROW(pcfosc::lj_potential(-1.0, s), pcfosc::domain_error);
  EXPECT_GT(pcfosc::lj_potential(0.5, s), 1e3);
  EXPECT_LT(pcfosc::lj_potential(50.0, s), 0.0);
  EXPECT_GT(pcfosc::lj_potential(50.0, s), -1e-9);
}

TEST(LJMinimum, ClosedFormAndNumeric) {
  const auto m = pcfosc::lj_minimum(LJSpec(1.0, 1.0));
  EXPECT_NEAR(m.r_min, kR6, 1e-15);
  EXPECT_EQ(m.u_min, -1.0);
  const LJSpec s(1.0, 1.0);
  const double h = 1e-6;
  EXPECT_NEAR((pcfosc::lj_potential(m.r_min + h, s) - pcfosc::lj_potential(m.r_min - h, s)) / (2 * h), 0.0, 1e-9);
  for (double sigma : {0.5, 1.0, 3.4}) {
    const LJSpec t(0.7, sigma);
    const auto num = pcfosc::golden_section_minimize<long double>(
        [&](long double r) {
          const long double s6 = std::pow(static_cast<long double>(sigma) / r, 6);
          return 4.0L * 0.7L * (s6 * s6 - s6);
        },
        0.8L * sigma, 2.0L * sigma, 1e-14L);
    EXPECT_NEAR(num.x, pcfosc::lj_minimum(t).r_min, 1e-8 * sigma);
    EXPECT_NEAR(num.value, -0.7, 1e-10);
  }
}

TEST(CurvatureMatchedK, EqualsSecondDerivative) {
  const LJSpec s(1.3, 0.9);
  const double r = pcfosc::lj_minimum(s).r_min, h = 1e-4;
  const double fd =
      (pcfosc::lj_potential(r + h, s) - 2 * pcfosc::lj_potential(r, s) + pcfosc::lj_potential(r - h, s)) / (h * h);
  EXPECT_NEAR(pcfosc::curvature_matched_k(s) / fd, 1.0, 1e-6);
  EXPECT_NEAR(pcfosc::curvature_matched_k(LJSpec()), 57.1464378708551811, 1e-12);
}

TEST(FitOscillator, DepthMatching) {
  EXPECT_DOUBLE_EQ(pcfosc::fit_oscillator(LJSpec(1.0, 1.0, 4), 1.0).omega(), 0.25);
  EXPECT_DOUBLE_EQ(pcfosc::fit_oscillator(LJSpec(2.0, 1.0, 1), 1.0).omega(), 2.0);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> param(0.1, 10.0);
  std::uniform_int_distribution<long> count(1, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const LJSpec s(param(rng), param(rng), count(rng));
    const double mu = param(rng), hbar = param(rng);
    const auto osc = pcfosc::fit_oscillator(s, mu, hbar);
    EXPECT_EQ(osc.mu(), mu);
    EXPECT_NEAR(osc.hbar_omega() * s.gamma_sq() / s.epsilon(), 1.0, 1e-14);
  }
}

TEST(BoundLevels, Examples) {
  const auto two = pcfosc::bound_levels(LJSpec(1.0, 1.0, 2));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].m, -2);
  EXPECT_EQ(two[0].energy, -0.75);
  EXPECT_EQ(two[1].m, -1);
  EXPECT_EQ(two[1].energy, -0.25);
  const auto one = pcfosc::bound_levels(LJSpec(1.0, 1.0, 1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].energy, -0.5);
}

TEST(BoundLevels, LadderShape) {
  for (long g2 = 1; g2 <= 100; ++g2) {
    for (double eps : {1.0, 0.37, 12.5}) {
      const LJSpec s(eps, 1.0, g2);
      const auto levels = pcfosc::bound_levels(s);
      ASSERT_EQ(static_cast<long>(levels.size()), g2);
      const double spacing = eps / static_cast<double>(g2);
      EXPECT_NEAR(levels.front().energy, -eps + spacing / 2, 1e-14 * eps);
      EXPECT_NEAR(levels.back().energy, -spacing / 2, 1e-14 * eps);
      for (std::size_t i = 0; i < levels.size(); ++i) {
        EXPECT_LT(levels[i].energy, 0.0);
        EXPECT_GT(levels[i].energy, -eps);
        if (i > 0) {
          EXPECT_NEAR(levels[i].energy - levels[i - 1].energy, spacing, 4e-16 * eps);
        }
      }
    }
  }
}

TEST(BoundLevels, EqualNegativeIntegerBranch) {
  for (long g2 = 1; g2 <= 30; ++g2) {
    const LJSpec s(1.7, 1.0, g2);
    const auto levels = pcfosc::bound_levels(s);
    const auto branch = pcfosc::integer_branch_spectrum(g2, -1, pcfosc::fit_oscillator(s, 2.0, 0.9));
    ASSERT_EQ(levels.size(), branch.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
      EXPECT_EQ(levels[i].m, branch[i].m);
      EXPECT_NEAR(levels[i].energy, branch[i].energy, 1e-12);
    }
  }
}

TEST(EstimateGammaSq, Examples) {
  const auto a = pcfosc::estimate_gamma_sq(1.0, 0.25);
  EXPECT_EQ(a.gamma_sq, 4);
  EXPECT_EQ(a.residual, 0.0);
  EXPECT_FALSE(a.spacing_exceeds_depth);
  const auto b = pcfosc::estimate_gamma_sq(1.0, 1.0);
  EXPECT_EQ(b.gamma_sq, 1);
  EXPECT_EQ(b.residual, 0.0);
  const auto c = pcfosc::estimate_gamma_sq(1.0, 0.3);
  EXPECT_EQ(c.gamma_sq, 3);
  EXPECT_NEAR(c.residual, 1.0 / 3.0, 1e-12);
  const auto d = pcfosc::estimate_gamma_sq(1.0, 5.0);
  EXPECT_EQ(d.gamma_sq, 1);
  EXPECT_TRUE(d.spacing_exceeds_depth);
  EXPECT_NEAR(d.residual, 0.8, 1e-15);
  EXPECT_THROW(pcfosc::estimate_gamma_sq(1.0, 0.0), pcfosc::domain_error);
  EXPECT_THROW(pcfosc::estimate_gamma_sq(1.0, -0.1), pcfosc::domain_error);
}

TEST(EstimateGammaSq, RecoversExactSpacing) {
  for (long g2 = 1; g2 <= 1000; ++g2) {
    for (double eps : {1.0, 0.013, 250.0}) {
      EXPECT_EQ(pcfosc::estimate_gamma_sq(eps, eps / static_cast<double>(g2)).gamma_sq, g2);
    }
  }
}

TEST(HarmonicCurve, Values) {
  const LJSpec s(1.0, 1.0);
  const double r = pcfosc::lj_minimum(s).r_min;
  EXPECT_EQ(pcfosc::harmonic_curve(r, s, 70.0), -1.0);
  EXPECT_NEAR(pcfosc::harmonic_curve(r + 0.1, s, 70.0), -0.65, 1e-13);
  for (double d : {0.01, 0.05, 0.2}) {
    EXPECT_NEAR(pcfosc::harmonic_curve(r + d, s, 70.0), pcfosc::harmonic_curve(r - d, s, 70.0), 1e-13);
  }
  EXPECT_THROW(pcfosc::harmonic_curve(r, s, 0.0), pcfosc::parameter_error);
}
