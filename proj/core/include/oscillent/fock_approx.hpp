#pragma once

#include <vector>

#include <Eigen/Dense>

#include "oscillent/numberstate_exact.hpp"
#include "oscillent/system_model.hpp"

namespace oscillent {

/// Separable atomic oscillator basis |j,k} with free inverse lengths gamma1,
/// gamma2 (same units as the system's gamma and Gamma), truncated at
/// j <= jmax, k <= kmax.
struct BasisParams {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  int jmax = 0;
  int kmax = 0;
};

/// Heuristic basis matched to the local symplectic scales of the ground state:
/// (sqrt(gamma Gamma) s, sqrt(gamma Gamma) / s). Coincides with the atomic
/// oscillator lengths at g = 1.
BasisParams default_basis(const OscillatorSystem& sys, int jmax, int kmax);

/// Generator of the overlaps {j,k|m,n>: their generating function in
/// w = (tau1, tau2, alpha, beta) is prefactor * exp(w^T N w) with
/// N = -I/2 + F(w)/Z and prefactor = sqrt(4 gamma1 gamma2 gamma Gamma / Z).
RealGenerator basis_transform_generator(const OscillatorSystem& sys, double gamma1,
                                        double gamma2);

struct FockLimits {
  int max_total_order = 96;  ///< cap on j + k + m + n
};

/// {j,k|m,n> for a single index quadruple.
double transform_coefficient(const OscillatorSystem& sys, const BasisParams& basis, int j, int k,
                             int m, int n, const FockLimits& limits = {});

/// Overlaps {j,k|m,n> for all j <= jmax, k <= kmax at fixed (m, n).
class CoeffTable {
 public:
  CoeffTable(const OscillatorSystem& sys, const BasisParams& basis, int m, int n,
             const FockLimits& limits = {});

  double operator()(int j, int k) const { return entries_(j, k); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  int m() const { return m_; }
  int n() const { return n_; }

  /// |1 - sum_{j,k} |{j,k|m,n>|^2|.
  double completeness_defect() const;

 private:
  int m_;
  int n_;
  Eigen::MatrixXd entries_;
};

/// Atomic amplitudes {j,k|Phi} (rows j, columns k) of a number state or
/// finite superposition in the truncated basis.
Eigen::MatrixXcd truncated_amplitudes(const OscillatorSystem& sys, const StateSpec& state,
                                      const BasisParams& basis, const FockLimits& limits = {});

/// rho_1 = C C^dagger, size (jmax+1) x (jmax+1).
Eigen::MatrixXcd reduced_density_truncated(const OscillatorSystem& sys, const StateSpec& state,
                                           const BasisParams& basis,
                                           const FockLimits& limits = {});

/// tr(rho_1^2) of the truncated reduced density matrix.
double purity_truncated(const OscillatorSystem& sys, const StateSpec& state,
                        const BasisParams& basis, const FockLimits& limits = {});

/// -sum p ln p over the eigenvalues of rho_1 / tr(rho_1); eigenvalues below
/// 1e-14 are dropped.
double entropy_truncated(const OscillatorSystem& sys, const StateSpec& state,
                         const BasisParams& basis, const FockLimits& limits = {});

double entropy_of_density(const Eigen::MatrixXcd& rho);

struct BasisChoice {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
};

struct ConvergenceRow {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  int jmax = 0;
  int kmax = 0;
  double purity = 0.0;
  double abs_error = 0.0;
};

/// Truncated purity for jmax = kmax = 0..max_truncation and each basis choice,
/// with the error against the exact generating-function value.
std::vector<ConvergenceRow> convergence_run(const OscillatorSystem& sys, const StateSpec& state,
                                            const std::vector<BasisChoice>& bases,
                                            int max_truncation, const FockLimits& limits = {});

}  // namespace oscillent
