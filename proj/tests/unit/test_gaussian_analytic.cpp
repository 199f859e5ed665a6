#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "oscillent/errors.hpp"
#include "oscillent/gaussian_analytic.hpp"
#include "oscillent/grid_oracle.hpp"
#include "wavefunction_oracle.hpp"

namespace oscillent {
namespace {

using S = OscillatorSystem;

TEST(PurityCoherent, NoEntanglementAtUnitFrequencyRatio) {
  for (double mu = 0.01; mu < 1.0; mu += 0.01) {
    EXPECT_NEAR(purity_coherent(S::from_dimensionless(1.0, mu)), 1.0, 1e-12);
  }
}

TEST(PurityCoherent, EqualMassesMatchTwoRootGOverGPlusOne) {
  EXPECT_NEAR(purity_coherent(S::from_dimensionless(4.0, 0.5)), 0.8, 1e-15);
  for (double g : {0.01, 0.5, 3.0, 77.0}) {
    EXPECT_NEAR(purity_coherent(S::from_dimensionless(g, 0.5)), 2 * std::sqrt(g) / (g + 1), 1e-14);
  }
}

TEST(PurityCoherent, MassSwapAndInversionSymmetry) {
  for (int i = 0; i < 50; ++i) {
    const double g = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    for (int j = 0; j < 50; ++j) {
      const double mu = (j + 1) / 51.0;
      const double p = purity_coherent(S::from_dimensionless(g, mu));
      EXPECT_NEAR(p, purity_coherent(S::from_dimensionless(g, 1 - mu)), 1e-12);
      EXPECT_NEAR(p, purity_coherent(S::from_dimensionless(1 / g, mu)), 1e-12);
      EXPECT_GT(p, 0.0);
      EXPECT_LE(p, 1.0 + 1e-15);
    }
  }
}

TEST(PurityUnbound, ReducesToCoherentFormAtZeroTime) {
  const auto sys = S::from_untrapped(S::MomentumRatio{2.0}, 1.5, 0.3);
  const double g = sys.gamma();
  const double G = sys.Gamma();
  const double expected = g * G / std::sqrt((g * g + G * G * 0.09) * (g * g + G * G * 0.49));
  EXPECT_NEAR(purity_unbound_gaussian(sys, 0.0), expected, 1e-15);
  EXPECT_NEAR(purity_unbound_gaussian(sys, 0.0), purity_coherent(sys), 1e-15);
}

TEST(PurityUnbound, StrictlyDecreasingInAbsoluteTime) {
  const auto sys = S::from_untrapped(S::MomentumRatio{0.7}, 1.0, 0.2);
  double previous = purity_unbound_gaussian(sys, 0.0);
  for (double tau = 0.25; tau < 50.0; tau *= 1.5) {
    const double p = purity_unbound_gaussian(sys, tau);
    EXPECT_LT(p, previous);
    EXPECT_DOUBLE_EQ(p, purity_unbound_gaussian(sys, -tau));
    previous = p;
  }
}

TEST(PurityUnbound, RejectsTrappedSystem) {
  EXPECT_THROW(purity_unbound_gaussian(S::from_dimensionless(2, 0.5), 1.0), UsageError);
}

TEST(StableArccosh, Boundary) {
  EXPECT_EQ(stable_arccosh(1.0), 0.0);
  EXPECT_EQ(stable_arccosh(1.0 + 5e-15), 0.0);
  EXPECT_EQ(stable_arccosh(1.0 - 1e-14), 0.0);
  EXPECT_NEAR(stable_arccosh(std::cosh(2.0)), 2.0, 1e-14);
  EXPECT_THROW(stable_arccosh(0.5), DomainError);
}

Matrix4 gaussian_oracle(const S& sys) {
  const Eigen::Vector2d relative{1.0, -1.0};
  const Eigen::Vector2d center{sys.mu1(), sys.mu2()};
  const Eigen::Matrix2d Q = std::pow(sys.gamma(), 2) * relative * relative.transpose() +
                            std::pow(sys.Gamma(), 2) * center * center.transpose();
  const Eigen::Matrix2d Qinv = Q.inverse();
  Matrix4 V = Matrix4::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      V(2 * i, 2 * j) = Qinv(i, j);
      V(2 * i + 1, 2 * j + 1) = Q(i, j);
    }
  }
  return V;
}

class CovarianceGrid : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(CovarianceGrid, MatchesGaussianMomentsAndStandardForm) {
  const auto [g, mu] = GetParam();
  const auto sys = S::from_dimensionless(g, mu);
  const CovariancePack pack = covariance_coherent(sys);
  EXPECT_LT((pack.V - gaussian_oracle(sys)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((pack.V - pack.V.transpose()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_GT(pack.V.determinant(), 0.0);

  const double P = purity_coherent(sys);
  EXPECT_NEAR(std::cosh(pack.r) * P, 1.0, 1e-12);
  EXPECT_NEAR(pack.logneg, pack.r, 1e-10);

  const double gg = sys.gamma() * sys.gamma();
  const double GG = sys.Gamma() * sys.Gamma();
  EXPECT_NEAR(std::pow(pack.scaler_s, 4), (gg + GG * mu * mu) / (gg + GG * (1 - mu) * (1 - mu)),
              1e-12);
  EXPECT_LT((pack.Vprime - pack.S * pack.V * pack.S.transpose()).cwiseAbs().maxCoeff(), 1e-12);

  const double ch = std::cosh(pack.r);
  const double sh = std::sinh(pack.r);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(pack.Vprime(i, i), ch, 1e-10);
  EXPECT_NEAR(std::abs(pack.Vprime(0, 2)), sh, 1e-10);
  EXPECT_NEAR(pack.Vprime(1, 3), -pack.Vprime(0, 2), 1e-10);
  for (auto [i, j] : {std::pair{0, 1}, {0, 3}, {1, 2}, {2, 3}}) {
    EXPECT_LT(std::abs(pack.Vprime(i, j)), 1e-10);
  }
  EXPECT_NEAR(ch * ch - sh * sh, 1.0, 1e-12);
  if (g > 1.0) EXPECT_GT(pack.Vprime(0, 2), 0.0);

  EXPECT_LT((classical_covariance(sys) - pack.V).cwiseAbs().maxCoeff(), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Points, CovarianceGrid,
                         ::testing::Values(std::pair{0.05, 0.5}, std::pair{0.3, 0.2},
                                           std::pair{1.0, 0.5}, std::pair{1.0, 0.1},
                                           std::pair{4.0, 0.5}, std::pair{7.0, 0.35},
                                           std::pair{30.0, 0.9}, std::pair{1000.0, 0.01}));

TEST(Covariance, UnitRatioEqualMassesHasNoPositionCorrelation) {
  const auto sys = S::from_dimensionless(1.0, 0.5);
  EXPECT_NEAR(covariance_coherent(sys).V(0, 2), 0.0, 1e-15);
  EXPECT_NEAR(classical_covariance(sys)(0, 2), 0.0, 1e-15);
  EXPECT_NEAR(covariance_coherent(sys).r, 0.0, 1e-12);
}

TEST(Covariance, SqueezingAtGFour) {
  EXPECT_NEAR(covariance_coherent(S::from_dimensionless(4.0, 0.5)).r, std::acosh(1.25), 1e-12);
}

TEST(Covariance, MinimumSymplecticEigenvalueOfSeparableState) {
  const auto pack = covariance_coherent(S::from_dimensionless(1.0, 0.3));
  EXPECT_NEAR(min_symplectic_eigenvalue_pt(pack.V), 1.0, 1e-12);
}

TEST(ClassicalCovariance, MonteCarloWithinThreeStandardErrors) {
  const auto sys = S::from_dimensionless(3.0, 0.25);
  const auto mc = sample_classical_covariance(sys, 1'000'000);
  const Matrix4 V = classical_covariance(sys);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_LE(std::abs(mc.mean(i, j) - V(i, j)), 3.0 * mc.standard_error(i, j))
          << "entry " << i << "," << j;
    }
  }
}

TEST(ClassicalCovariance, SeedDeterminesSamples) {
  const auto sys = S::from_dimensionless(3.0, 0.25);
  const auto a = sample_classical_covariance(sys, 1000, 7);
  const auto b = sample_classical_covariance(sys, 1000, 7);
  const auto c = sample_classical_covariance(sys, 1000, 8);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_NE(a.mean, c.mean);
}

TEST(PositionCovariance, VanishingCases) {
  EXPECT_NEAR(position_covariance(S::from_dimensionless(1.0, 0.3), CoherentState{{1.0, 2.0}, {}}), 0.0,
              1e-15);
  for (int m = 0; m < 4; ++m) {
    EXPECT_NEAR(position_covariance(S::from_dimensionless(1.0, 0.3), NumberState{m, m}), 0.0, 1e-14);
  }
}

TEST(PositionCovariance, ClosedFormsInTermsOfG) {
  const auto sys = S::from_dimensionless(2.0, 0.5);
  EXPECT_NEAR(position_covariance(sys, NumberState{0, 1}), 1.25, 1e-14);
  for (double g : {0.3, 2.0, 9.0}) {
    const auto s = S::from_dimensionless(g, 0.2);
    EXPECT_NEAR(position_covariance(s, CoherentState{}), 0.5 * (1 - 1 / g), 1e-14);
    EXPECT_NEAR(position_covariance(s, NumberState{2, 1}), 0.5 * (3 - 5 / g), 1e-14);
  }
}

TEST(PositionCovariance, MatchesQuadrature) {
  for (auto [g, mu, m, n] : {std::tuple{2.0, 0.5, 0, 1}, {5.0, 0.3, 1, 2}, {0.4, 0.8, 2, 0}}) {
    const auto sys = S::from_dimensionless(g, mu);
    auto density = [&](double x1, double x2) {
      const double r = x1 - x2;
      const double X = mu * x1 + (1 - mu) * x2;
      const double psi = testing::eigenfunction(m, sys.gamma(), r) * testing::eigenfunction(n, 1.0, X);
      return psi * psi;
    };
    const double L = 40.0;
    const int points = 801;
    const double norm = testing::trapezoid_2d(density, L, points);
    const double m1 = testing::trapezoid_2d([&](double a, double b) { return a * density(a, b); }, L, points);
    const double m2 = testing::trapezoid_2d([&](double a, double b) { return b * density(a, b); }, L, points);
    const double m12 =
        testing::trapezoid_2d([&](double a, double b) { return a * b * density(a, b); }, L, points);
    EXPECT_NEAR(norm, 1.0, 1e-9);
    EXPECT_NEAR(m12 - m1 * m2, position_covariance(sys, NumberState{m, n}), 1e-8);
  }
}

TEST(PositionCovariance, UnsupportedState) {
  EXPECT_THROW(position_covariance(S::from_dimensionless(2, 0.3),
                                   Superposition{{{0, 1, 1.0}}}),
               UsageError);
}

}  // namespace
}  // namespace oscillent
