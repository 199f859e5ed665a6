#pragma once

#include <complex>

#include <Eigen/Dense>

#include "oscillent/system_model.hpp"

namespace oscillent {

struct GridSpec {
  int n_points = 512;
  /// Half-width of the window in units of the larger single-particle position
  /// standard deviation.
  double extent_sigmas = 8.0;
};

void validate(const GridSpec& grid);

/// Square sampling window in atomic coordinates, centered on the wave packet.
struct GridWindow {
  double center1 = 0.0;
  double center2 = 0.0;
  double half_width = 0.0;
  int n_points = 0;

  double spacing() const { return 2.0 * half_width / n_points; }
  double x1(int i) const { return center1 - half_width + (i + 0.5) * spacing(); }
  double x2(int j) const { return center2 - half_width + (j + 0.5) * spacing(); }
};

GridWindow grid_window(const OscillatorSystem& sys, const StateSpec& state, const GridSpec& grid);

/// Normalized harmonic-oscillator eigenfunction with inverse length `scale`,
/// evaluated by the three-term recurrence with running rescaling (no overflow
/// or premature underflow for large indices).
double oscillator_eigenfunction(int index, double scale, double x);

/// Phi(x1 - x2, mu1 x1 + mu2 x2) for any supported state.
std::complex<double> eval_wavefunction(const OscillatorSystem& sys, const StateSpec& state,
                                       double x1, double x2);

/// W(i, j) = Phi(x1_i, x2_j) on the window.
Eigen::MatrixXcd sample_wavefunction(const OscillatorSystem& sys, const StateSpec& state,
                                     const GridWindow& window);

struct SchmidtResult {
  Eigen::VectorXd singular_values;  ///< descending
  double purity = 0.0;              ///< sum s^4 / (sum s^2)^2
  double entropy = 0.0;             ///< -sum p ln p, p = s^2 / sum s^2
  double norm_defect = 0.0;         ///< |sum |Phi|^2 dx1 dx2 - 1|
  bool extent_warning = false;      ///< norm_defect > 1e-3
};

inline constexpr double kNormDefectWarning = 1e-3;

SchmidtResult schmidt_analyze(const OscillatorSystem& sys, const StateSpec& state,
                              const GridSpec& grid = {});

/// Singular-value statistics of an arbitrary sampled matrix.
SchmidtResult schmidt_of_samples(const Eigen::MatrixXcd& samples, double cell_area);

/// Direct quadrature of the four-fold purity integral on an N <= 32 grid; the
/// discrete sum is identical to the singular-value route on the same grid.
double direct_quadrature_purity(const OscillatorSystem& sys, const StateSpec& state,
                                const GridSpec& grid);

struct DensityGrid {
  Eigen::VectorXd x1;       ///< coordinates in units of 1/Gamma
  Eigen::VectorXd x2;       ///< coordinates in units of 1/Gamma
  Eigen::MatrixXd density;  ///< |Phi(x1_i, x2_j)|^2
  double cell_area = 0.0;   ///< dx1 dx2 in physical units
  double gamma_units = 1.0; ///< Gamma used for the axis scaling
  double extent = 0.0;      ///< half-width in units of 1/Gamma
};

DensityGrid density_grid(const OscillatorSystem& sys, const StateSpec& state,
                         const GridSpec& grid = {});

}  // namespace oscillent
