#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "oscillent/system_model.hpp"

namespace oscillent {

using Matrix4 = Eigen::Matrix4d;

/// Covariance matrix of the ground/coherent state in atomic phase-space
/// coordinates, ordered (x1, p1, x2, p2) with V_kl = <R_k R_l + R_l R_k>/2 and
/// R = (sqrt2 dx1, sqrt2/hbar dp1, sqrt2 dx2, sqrt2/hbar dp2).
struct CovariancePack {
  Matrix4 V;
  /// Local symplectic scaling S = S_a (+) S_b taking V to standard form.
  Matrix4 S;
  /// S V S^T: cosh r on the diagonal, +/- sinh r on the x1x2 / p1p2 couplings.
  Matrix4 Vprime;
  double r = 0.0;
  /// Logarithmic negativity from the smallest symplectic eigenvalue of the partial transpose.
  double logneg = 0.0;
  double scaler_s = 1.0;
};

/// Purity of the reduced one-atom state for any molecular coherent state,
/// including the ground state. Independent of the displacements.
double purity_coherent(const OscillatorSystem& sys);

/// Purity of the vibrational ground state times a freely spreading
/// center-of-mass packet at dimensionless time tau. Requires an untrapped system.
double purity_unbound_gaussian(const OscillatorSystem& sys, double tau);

/// log(x + sqrt(x^2 - 1)) with arguments in [1, 1 + 1e-14] (and rounding
/// noise below 1) mapped to exactly 0.
double stable_arccosh(double x);

CovariancePack covariance_coherent(const OscillatorSystem& sys);

/// Smallest symplectic eigenvalue of the partially transposed (p2 -> -p2)
/// two-mode covariance matrix, in the convention where the vacuum has V = 1.
double min_symplectic_eigenvalue_pt(const Matrix4& V);

/// Second moments of the classical "two masses on a spring" distribution,
/// transformed to atomic coordinates with the same scalings as V.
Matrix4 classical_covariance(const OscillatorSystem& sys);

struct MonteCarloCovariance {
  Matrix4 mean;            ///< sample estimate of V
  Matrix4 standard_error;  ///< per-entry standard error of the estimate
  std::size_t samples = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20100531;

/// Draws `samples` points from the classical distribution and estimates V.
MonteCarloCovariance sample_classical_covariance(const OscillatorSystem& sys,
                                                 std::size_t samples,
                                                 std::uint64_t seed = kDefaultSeed);

/// <x1 x2> - <x1><x2> for coherent and number states.
double position_covariance(const OscillatorSystem& sys, const StateSpec& state);

}  // namespace oscillent
