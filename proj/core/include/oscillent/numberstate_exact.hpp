#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "oscillent/system_model.hpp"

namespace oscillent {

/// Gaussian generating function prefactor * exp(z^T M z) over
/// z = (alpha_1..alpha_4, beta_1..beta_4). Slot i of z labels the i-th factor
/// of the purity integral
///   Phi(x1,x2) Phi*(x1',x2) Phi(x1',x2') Phi*(x1,x2'),
/// so odd slots carry the ket coefficients and even slots their conjugates.
/// For number-state extraction `prefactor` is the ground/packet purity.
template <typename Scalar>
struct QuadraticGenerator {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix M;
  Scalar prefactor{1};

  Eigen::Index dim() const { return M.rows(); }
};

using RealGenerator = QuadraticGenerator<double>;
using ComplexGenerator = QuadraticGenerator<std::complex<double>>;

/// Gaussian purity integral in z = (x1, x1', x2, x2'):
///   prefactor/pi^2 * int exp(-z^T A z + B^T z + C),  B = Lmap * (alpha, beta),
///   C = (alpha, beta)^T Cquad (alpha, beta).
template <typename Scalar>
struct GaussianIntegralData {
  Eigen::Matrix<Scalar, 4, 4> A;
  Eigen::Matrix<double, 4, 8> Lmap;
  Eigen::Matrix<double, 8, 8> Cquad;
  Scalar prefactor{1};
};

/// Denominator used in the closed-form generator entries. Only
/// SquaredFractions, 4(gamma^2 + Gamma^2 mu1^2)(gamma^2 + Gamma^2 mu2^2),
/// yields det M = 1/256 and the known number-state purities; LinearFractions,
/// 4(gamma^2 + Gamma^2 mu1)(gamma^2 + Gamma^2 mu2), is kept for comparison.
enum class MDenominator { SquaredFractions, LinearFractions };

/// Closed-form 8x8 generator built from its entries u, v, w, s, t.
RealGenerator build_M(const OscillatorSystem& sys,
                      MDenominator denominator = MDenominator::SquaredFractions);

/// Purity integral data of the trapped (or tau = 0) problem.
GaussianIntegralData<double> build_A(const OscillatorSystem& sys);

/// Purity integral data for the vibrational state times a center-of-mass
/// packet spread to dimensionless time tau. Reduces to build_A at tau = 0.
/// Requires an untrapped system. The beta columns of Lmap are zero since the
/// packet carries no center-of-mass quantum number.
GaussianIntegralData<std::complex<double>> build_At(const OscillatorSystem& sys, double tau);

/// M = Lmap^T A^{-1} Lmap / 4 + Cquad, prefactor / sqrt(det A).
/// Throws NumericalError when cond(A) exceeds 1e10.
RealGenerator build_M_from_A(const GaussianIntegralData<double>& data);
ComplexGenerator build_M_from_A(const GaussianIntegralData<std::complex<double>>& data);

struct ExactLimits {
  int max_number_order = 8;   ///< cap on m + n for purity_number
  int max_cross_order = 16;   ///< cap on sum_i (m_i + n_i) for purity_cross
};

/// Exact purity of |m, n>.
double purity_number(const OscillatorSystem& sys, int m, int n, const ExactLimits& limits = {});

/// Exact purity of vibrational state m with the spreading packet at time tau.
/// Throws NumericalError if the imaginary residue exceeds 1e-8.
double purity_number_unbound(const OscillatorSystem& sys, int m, double tau,
                             const ExactLimits& limits = {});

struct SlotIndex {
  int m = 0;
  int n = 0;
};

/// Cross term P({m_i, n_i}) of the superposition purity; zero for odd total order.
double purity_cross(const OscillatorSystem& sys, const std::array<SlotIndex, 4>& slots,
                    const ExactLimits& limits = {});

/// Purity of a finite superposition of number states.
double purity_superposition(const OscillatorSystem& sys, const Superposition& state,
                            const ExactLimits& limits = {});

struct PurityExtremum {
  double mu1 = 0.0;
  double purity = 0.0;
};

/// Maximizes purity_superposition over mu1 in [lo, hi] at fixed g (Brent).
PurityExtremum maximize_superposition_purity(double g, const Superposition& state, double lo,
                                             double hi, const ExactLimits& limits = {});

}  // namespace oscillent
