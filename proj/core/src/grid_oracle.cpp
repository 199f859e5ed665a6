#include "oscillent/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SVD>

#include "oscillent/errors.hpp"

namespace oscillent {

namespace {

using cd = std::complex<double>;

struct ModeWidths {
  double var_relative;
  double var_center;
  double center_relative = 0.0;
  double center_com = 0.0;
};

ModeWidths mode_widths(const OscillatorSystem& sys, const StateSpec& state) {
  const double base_r = 0.5 / (sys.gamma() * sys.gamma());
  const double base_x = 0.5 / (sys.Gamma() * sys.Gamma());
  return std::visit(
      [&](const auto& s) -> ModeWidths {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentState>) {
          return {base_r, base_x, std::sqrt(2.0) * s.alpha.real() / sys.gamma(),
                  std::sqrt(2.0) * s.beta.real() / sys.Gamma()};
        } else if constexpr (std::is_same_v<T, NumberState>) {
          return {base_r * (2 * s.m + 1), base_x * (2 * s.n + 1)};
        } else if constexpr (std::is_same_v<T, Superposition>) {
          int max_m = 0;
          int max_n = 0;
          for (const auto& t : s.terms) {
            max_m = std::max(max_m, t.m);
            max_n = std::max(max_n, t.n);
          }
          return {base_r * (2 * max_m + 1), base_x * (2 * max_n + 1)};
        } else {
          return {base_r * (2 * s.m + 1), base_x * (1.0 + s.tau * s.tau)};
        }
      },
      state);
}

// Spreading center-of-mass packet phi_u(x, tau).
cd spreading_packet(double Gamma, double tau, double x) {
  const cd one_plus_itau(1.0, tau);
  const double norm = std::sqrt(Gamma / std::sqrt(std::numbers::pi));
  return norm / std::sqrt(one_plus_itau) *
         std::exp(-Gamma * Gamma * x * x * one_plus_itau / (2.0 * (1.0 + tau * tau)));
}

struct Evaluator {
  const OscillatorSystem& sys;
  double r;
  double X;

  cd operator()(const CoherentState& s) const {
    const double g = sys.gamma();
    const double G = sys.Gamma();
    const double root2 = std::sqrt(2.0);
    const double ar = root2 * s.alpha.real() / g;
    const double bx = root2 * s.beta.real() / G;
    // Momentum offsets divided by hbar.
    const double aq = root2 * g * s.alpha.imag();
    const double bp = root2 * G * s.beta.imag();
    const double amplitude = std::sqrt(g * G / std::numbers::pi) *
                             std::exp(-0.5 * g * g * (r - ar) * (r - ar) -
                                      0.5 * G * G * (X - bx) * (X - bx));
    const double phase = -0.5 * (ar * aq + bx * bp) + r * aq + X * bp;
    return amplitude * cd(std::cos(phase), std::sin(phase));
  }
  cd operator()(const NumberState& s) const {
    return oscillator_eigenfunction(s.m, sys.gamma(), r) *
           oscillator_eigenfunction(s.n, sys.Gamma(), X);
  }
  cd operator()(const Superposition& s) const {
    cd acc{0.0};
    for (const auto& t : s.terms) {
      acc += t.coefficient * oscillator_eigenfunction(t.m, sys.gamma(), r) *
             oscillator_eigenfunction(t.n, sys.Gamma(), X);
    }
    return acc;
  }
  cd operator()(const UnboundGaussian& s) const {
    return oscillator_eigenfunction(s.m, sys.gamma(), r) * spreading_packet(sys.Gamma(), s.tau, X);
  }
};

}  // namespace

void validate(const GridSpec& grid) {
  if (grid.n_points < 16) throw DomainError("grid needs at least 16 points per axis");
  if (!(grid.extent_sigmas >= 4.0)) throw DomainError("grid extent must be at least 4 sigma");
}

double oscillator_eigenfunction(int index, double scale, double x) {
  if (index < 0) throw DomainError("negative oscillator index");
  const double xi = scale * x;
  // psi_k = value * exp(log_scale); psi_0 = (scale^2/pi)^{1/4} exp(-xi^2/2).
  double log_scale = 0.25 * std::log(scale * scale / std::numbers::pi) - 0.5 * xi * xi;
  double previous = 0.0;
  double current = 1.0;
  for (int k = 0; k < index; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1)) * xi * current - std::sqrt(double(k) / (k + 1)) * previous;
    previous = current;
    current = next;
    const double magnitude = std::abs(current);
    if (magnitude > 1e150 || (magnitude < 1e-150 && magnitude > 0.0)) {
      log_scale += std::log(magnitude);
      previous /= magnitude;
      current /= magnitude;
    }
  }
  if (current == 0.0) return 0.0;
  return current * std::exp(log_scale);
}

GridWindow grid_window(const OscillatorSystem& sys, const StateSpec& state, const GridSpec& grid) {
  validate(grid);
  validate(sys, state);
  const ModeWidths w = mode_widths(sys, state);
  const double mu1 = sys.mu1();
  const double mu2 = sys.mu2();
  // x1 = X + mu2 r, x2 = X - mu1 r.
  const double sigma1 = std::sqrt(w.var_center + mu2 * mu2 * w.var_relative);
  const double sigma2 = std::sqrt(w.var_center + mu1 * mu1 * w.var_relative);
  GridWindow window;
  window.center1 = w.center_com + mu2 * w.center_relative;
  window.center2 = w.center_com - mu1 * w.center_relative;
  window.half_width = grid.extent_sigmas * std::max(sigma1, sigma2);
  window.n_points = grid.n_points;
  return window;
}

cd eval_wavefunction(const OscillatorSystem& sys, const StateSpec& state, double x1, double x2) {
  const double r = x1 - x2;
  const double X = sys.mu1() * x1 + sys.mu2() * x2;
  return std::visit(Evaluator{sys, r, X}, state);
}

Eigen::MatrixXcd sample_wavefunction(const OscillatorSystem& sys, const StateSpec& state,
                                     const GridWindow& window) {
  const int n = window.n_points;
  Eigen::MatrixXcd W(n, n);
  for (int i = 0; i < n; ++i) {
    const double x1 = window.x1(i);
    for (int j = 0; j < n; ++j) {
      W(i, j) = eval_wavefunction(sys, state, x1, window.x2(j));
    }
  }
  return W;
}

SchmidtResult schmidt_of_samples(const Eigen::MatrixXcd& samples, double cell_area) {
  SchmidtResult result;
  const bool real = samples.imag().cwiseAbs().maxCoeff() == 0.0;
  if (real) {
    const Eigen::MatrixXd Wr = samples.real();
    result.singular_values = Eigen::BDCSVD<Eigen::MatrixXd>(Wr).singularValues();
  } else {
    result.singular_values = Eigen::BDCSVD<Eigen::MatrixXcd>(samples).singularValues();
  }
  const Eigen::ArrayXd s2 = result.singular_values.array().square();
  const double total = s2.sum();
  if (!(total > 0.0)) throw NumericalError("sampled wavefunction vanishes on the grid");
  result.purity = s2.square().sum() / (total * total);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < s2.size(); ++i) {
    const double p = s2[i] / total;
    if (p < 1e-14) continue;
    entropy -= p * std::log(p);
  }
  result.entropy = std::max(0.0, entropy);
  result.norm_defect = std::abs(total * cell_area - 1.0);
  result.extent_warning = result.norm_defect > kNormDefectWarning;
  return result;
}

SchmidtResult schmidt_analyze(const OscillatorSystem& sys, const StateSpec& state,
                              const GridSpec& grid) {
  const GridWindow window = grid_window(sys, state, grid);
  const double h = window.spacing();
  return schmidt_of_samples(sample_wavefunction(sys, state, window), h * h);
}

double direct_quadrature_purity(const OscillatorSystem& sys, const StateSpec& state,
                                const GridSpec& grid) {
  if (grid.n_points > 32) {
    throw ResourceError("direct quadrature is O(N^4); use n_points <= 32");
  }
  const GridWindow window = grid_window(sys, state, grid);
  const Eigen::MatrixXcd W = sample_wavefunction(sys, state, window);
  const int n = window.n_points;
  cd sum{0.0};
  for (int i = 0; i < n; ++i) {
    for (int ip = 0; ip < n; ++ip) {
      for (int j = 0; j < n; ++j) {
        const cd a = W(i, j) * std::conj(W(ip, j));
        for (int jp = 0; jp < n; ++jp) {
          sum += a * W(ip, jp) * std::conj(W(i, jp));
        }
      }
    }
  }
  const double norm = W.squaredNorm();
  return sum.real() / (norm * norm);
}

DensityGrid density_grid(const OscillatorSystem& sys, const StateSpec& state,
                         const GridSpec& grid) {
  const GridWindow window = grid_window(sys, state, grid);
  const Eigen::MatrixXcd W = sample_wavefunction(sys, state, window);
  const double G = sys.Gamma();
  DensityGrid out;
  out.gamma_units = G;
  out.extent = window.half_width * G;
  out.cell_area = window.spacing() * window.spacing();
  out.x1.resize(window.n_points);
  out.x2.resize(window.n_points);
  for (int i = 0; i < window.n_points; ++i) {
    out.x1[i] = window.x1(i) * G;
    out.x2[i] = window.x2(i) * G;
  }
  out.density = W.cwiseAbs2();
  return out;
}

}  // namespace oscillent
