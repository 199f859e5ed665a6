#include <cmath>

#include <gtest/gtest.h>

#include "oscillent/errors.hpp"
#include "oscillent/gaussian_analytic.hpp"
#include "oscillent/numberstate_exact.hpp"
#include "oscillent/system_model.hpp"

namespace oscillent {
namespace {

TEST(SystemModel, EqualMassesEqualFrequencies) {
  const auto sys = OscillatorSystem::from_physical(1, 1, 1, 1, 1);
  EXPECT_DOUBLE_EQ(sys.mu1(), 0.5);
  EXPECT_DOUBLE_EQ(sys.mu2(), 0.5);
  EXPECT_DOUBLE_EQ(sys.g(), 1.0);
  EXPECT_NEAR(sys.Gamma(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(sys.gamma(), std::sqrt(0.5), 1e-15);
}

TEST(SystemModel, RatioArithmetic) {
  const auto sys = OscillatorSystem::from_physical(1, 3, 10, 1, 1);
  EXPECT_DOUBLE_EQ(sys.mu1(), 0.25);
  EXPECT_DOUBLE_EQ(sys.mu2(), 0.75);
  EXPECT_DOUBLE_EQ(sys.g(), 10.0);
}

TEST(SystemModel, LengthScalesFromDefinitions) {
  const auto sys = OscillatorSystem::from_physical(2, 2, 4, 1, 1);
  const double gamma = std::sqrt(1.0 * 4.0 / 1.0);  // reduced mass 1
  const double Gamma = std::sqrt(4.0 * 1.0 / 1.0);  // total mass 4
  EXPECT_NEAR(sys.gamma(), gamma, 1e-15);
  EXPECT_NEAR(sys.Gamma(), Gamma, 1e-15);
  EXPECT_NEAR(sys.gamma() * sys.gamma() / (sys.Gamma() * sys.Gamma()),
              sys.mu1() * sys.mu2() * sys.g(), 1e-15);
}

TEST(SystemModel, Dimensionless) {
  EXPECT_NEAR(OscillatorSystem::from_dimensionless(1, 0.5).gamma(), 0.5, 1e-15);
  EXPECT_NEAR(OscillatorSystem::from_dimensionless(4, 0.5).gamma(), 1.0, 1e-15);
  const auto sys = OscillatorSystem::from_dimensionless(10, 0.25);
  EXPECT_NEAR(sys.gamma() * sys.gamma(), 1.875, 1e-14);
  EXPECT_DOUBLE_EQ(sys.Gamma(), 1.0);
  EXPECT_DOUBLE_EQ(sys.hbar(), 1.0);
  EXPECT_DOUBLE_EQ(sys.total_mass(), 1.0);
}

TEST(SystemModel, MassFractionsSumExactly) {
  for (double mu : {1e-6, 0.1, 0.3, 1.0 / 3.0, 0.7, 0.999999}) {
    const auto sys = OscillatorSystem::from_dimensionless(2.0, mu);
    EXPECT_EQ(sys.mu1() + sys.mu2(), 1.0);
  }
}

TEST(SystemModel, Untrapped) {
  using S = OscillatorSystem;
  EXPECT_NEAR(S::from_untrapped(S::MomentumRatio{1.0}, 1.0, 0.5).gamma(), 1.0, 1e-15);
  const auto sys = S::from_untrapped(S::MomentumRatio{3.0}, 1.0, 0.5);
  EXPECT_NEAR(sys.gamma(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(sys.c(), 3.0, 1e-14);
  EXPECT_FALSE(sys.trapped());
  EXPECT_THROW(sys.g(), UsageError);
  const auto free = S::from_untrapped(S::RelativeScale{std::sqrt(0.25)}, 1.0, 0.5);
  EXPECT_NEAR(purity_unbound_gaussian(free, 0.0), 1.0, 1e-15);
}

TEST(SystemModel, DomainErrors) {
  using S = OscillatorSystem;
  EXPECT_THROW(S::from_physical(0, 1, 1, 1), DomainError);
  EXPECT_THROW(S::from_physical(1, -1, 1, 1), DomainError);
  EXPECT_THROW(S::from_physical(1, 1, 0, 1), DomainError);
  EXPECT_THROW(S::from_physical(1, 1, 1, -1), DomainError);
  EXPECT_THROW(S::from_physical(1, 1, 1, 1, 0.0), DomainError);
  EXPECT_THROW(S::from_physical(1, 1, 1, 0), DomainError);
  EXPECT_THROW(S::from_physical(1, 1, 1, 1, 1, 2.0), DomainError);
  EXPECT_THROW(S::from_dimensionless(0, 0.5), DomainError);
  EXPECT_THROW(S::from_dimensionless(1, 0.0), DomainError);
  EXPECT_THROW(S::from_dimensionless(1, 1.0), DomainError);
  EXPECT_THROW(S::from_dimensionless(1, std::nan("")), DomainError);
  EXPECT_THROW(S::from_untrapped(S::MomentumRatio{0.0}, 1.0, 0.5), DomainError);
}

TEST(SystemModel, StateValidation) {
  const auto sys = OscillatorSystem::from_dimensionless(2, 0.3);
  EXPECT_NO_THROW(validate(sys, NumberState{2, 3}));
  EXPECT_THROW(validate(sys, NumberState{-1, 0}), DomainError);
  EXPECT_THROW(validate(sys, Superposition{{{0, 1, 0.5}, {1, 0, 0.5}}}), DomainError);
  EXPECT_THROW(validate(sys, Superposition{{{0, 1, std::sqrt(0.5)}, {0, 1, std::sqrt(0.5)}}}),
               DomainError);
  EXPECT_THROW(validate(sys, Superposition{}), DomainError);
  EXPECT_THROW(validate(sys, UnboundGaussian{0, 1.0}), UsageError);
  const auto sup = Superposition::normalized({{0, 1, 3.0}, {1, 0, 4.0}});
  EXPECT_NEAR(sup.norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(sup.terms[0].coefficient), 0.6, 1e-15);
  EXPECT_THROW(Superposition::normalized({{0, 0, 0.0}}), DomainError);
}

TEST(SystemModel, GaugeIndependence) {
  const auto sys = OscillatorSystem::from_physical(0.7, 2.1, 13.0, 1.7, 0.37);
  const auto canonical = OscillatorSystem::from_dimensionless(sys.g(), sys.mu1());
  EXPECT_NEAR(sys.canonical().gamma(), canonical.gamma(), 1e-14);
  EXPECT_NEAR(purity_coherent(sys), purity_coherent(canonical), 1e-12);
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      EXPECT_NEAR(purity_number(sys, m, n), purity_number(canonical, m, n), 1e-12);
    }
  }
  EXPECT_NEAR(sys.effective_g(), sys.g(), 1e-12);
}

TEST(SystemModel, HbarRescaling) {
  const auto base = OscillatorSystem::from_physical(1.3, 0.4, 7.0, 2.0, 1.0);
  for (double hbar : {1e-3, 0.1, 10.0, 1e3}) {
    const auto scaled = OscillatorSystem::from_physical(1.3, 0.4, 7.0, 2.0, hbar);
    EXPECT_NEAR(purity_coherent(scaled), purity_coherent(base), 1e-12);
    EXPECT_NEAR(purity_number(scaled, 1, 2), purity_number(base, 1, 2), 1e-12);
  }
}

}  // namespace
}  // namespace oscillent
