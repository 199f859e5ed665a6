#include "oscillent/gaussian_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Eigenvalues>

#include "oscillent/errors.hpp"

namespace oscillent {

namespace {

struct Scales {
  double gamma2;
  double Gamma2;
  double mu1;
  double mu2;
};

Scales scales_of(const OscillatorSystem& sys) {
  return {sys.gamma() * sys.gamma(), sys.Gamma() * sys.Gamma(), sys.mu1(), sys.mu2()};
}

// Linear map from molecular (X, P, r, q) to atomic (x1, p1, x2, p2) phase space.
Matrix4 molecular_to_atomic(double mu1, double mu2) {
  Matrix4 T;
  T << 1.0, 0.0, mu2, 0.0,
       0.0, mu1, 0.0, 1.0,
       1.0, 0.0, -mu1, 0.0,
       0.0, mu2, 0.0, -1.0;
  return T;
}

Eigen::Vector4d r_vector_scale(double hbar) {
  const double root2 = std::sqrt(2.0);
  return {root2, root2 / hbar, root2, root2 / hbar};
}

}  // namespace

double purity_coherent(const OscillatorSystem& sys) {
  const auto [gamma2, Gamma2, mu1, mu2] = scales_of(sys);
  return sys.gamma() * sys.Gamma() /
         std::sqrt((gamma2 + Gamma2 * mu1 * mu1) * (gamma2 + Gamma2 * mu2 * mu2));
}

double purity_unbound_gaussian(const OscillatorSystem& sys, double tau) {
  if (sys.trapped()) {
    throw UsageError("purity_unbound_gaussian needs an untrapped system");
  }
  const auto [gamma2, Gamma2, mu1, mu2] = scales_of(sys);
  return sys.gamma() * sys.Gamma() /
         std::sqrt((gamma2 + Gamma2 * mu1 * mu1) * (gamma2 + Gamma2 * mu2 * mu2) +
                   gamma2 * gamma2 * tau * tau);
}

double stable_arccosh(double x) {
  if (x <= 1.0 + 1e-14) {
    if (x < 1.0 - 1e-12) throw DomainError("arccosh argument below 1");
    return 0.0;
  }
  return std::log(x + std::sqrt(x * x - 1.0));
}

double min_symplectic_eigenvalue_pt(const Matrix4& V) {
  // Partial transposition flips p2. The symplectic eigenvalues of Vt are the
  // moduli of the eigenvalues of the Hermitian matrix i Vt^{1/2} J Vt^{1/2},
  // which stays well conditioned when two of them coincide.
  const Eigen::Vector4d flip{1.0, 1.0, 1.0, -1.0};
  const Matrix4 Vt = flip.asDiagonal() * V * flip.asDiagonal();
  const Eigen::SelfAdjointEigenSolver<Matrix4> root(Vt);
  if (!(root.eigenvalues().minCoeff() > 0.0)) {
    throw NumericalError("covariance matrix is not positive definite");
  }
  const Matrix4 half = root.operatorSqrt();
  Matrix4 J = Matrix4::Zero();
  J(0, 1) = J(2, 3) = 1.0;
  J(1, 0) = J(3, 2) = -1.0;
  const Eigen::Matrix4cd H = std::complex<double>(0.0, 1.0) * (half * J * half).cast<std::complex<double>>();
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(H, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().minCoeff();
}

CovariancePack covariance_coherent(const OscillatorSystem& sys) {
  const auto [gamma2, Gamma2, mu1, mu2] = scales_of(sys);
  CovariancePack pack;
  Matrix4& V = pack.V;
  V.setZero();
  V(0, 0) = 1.0 / Gamma2 + mu2 * mu2 / gamma2;
  V(1, 1) = gamma2 + Gamma2 * mu1 * mu1;
  V(2, 2) = 1.0 / Gamma2 + mu1 * mu1 / gamma2;
  V(3, 3) = gamma2 + Gamma2 * mu2 * mu2;
  V(0, 2) = V(2, 0) = 1.0 / Gamma2 - mu1 * mu2 / gamma2;
  V(1, 3) = V(3, 1) = -gamma2 + Gamma2 * mu1 * mu2;

  const double gG = sys.gamma() * sys.Gamma();
  const double s = std::pow((gamma2 + Gamma2 * mu1 * mu1) / (gamma2 + Gamma2 * mu2 * mu2), 0.25);
  const double root = std::sqrt(gG);
  pack.scaler_s = s;
  pack.S = Eigen::Vector4d(root * s, 1.0 / (root * s), root / s, s / root).asDiagonal();
  pack.Vprime = pack.S * V * pack.S.transpose();

  pack.r = stable_arccosh(1.0 / purity_coherent(sys));
  const double nu = min_symplectic_eigenvalue_pt(V);
  pack.logneg = nu < 1.0 ? -std::log(nu) : 0.0;
  return pack;
}

Matrix4 classical_covariance(const OscillatorSystem& sys) {
  const auto [gamma2, Gamma2, mu1, mu2] = scales_of(sys);
  const double hbar2 = sys.hbar() * sys.hbar();
  // Variances of the independent Gaussian factors in (X, P, r, q).
  const Eigen::Vector4d molecular{0.5 / Gamma2, 0.5 * hbar2 * Gamma2, 0.5 / gamma2,
                                  0.5 * hbar2 * gamma2};
  const Matrix4 T = r_vector_scale(sys.hbar()).asDiagonal() * molecular_to_atomic(mu1, mu2);
  return T * molecular.asDiagonal() * T.transpose();
}

MonteCarloCovariance sample_classical_covariance(const OscillatorSystem& sys,
                                                 std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw DomainError("need at least two samples");
  const auto [gamma2, Gamma2, mu1, mu2] = scales_of(sys);
  const double hbar = sys.hbar();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit(0.0, 1.0);
  const Eigen::Vector4d sd{std::sqrt(0.5 / Gamma2), hbar * std::sqrt(0.5 * Gamma2),
                           std::sqrt(0.5 / gamma2), hbar * std::sqrt(0.5 * gamma2)};
  const Matrix4 T = r_vector_scale(hbar).asDiagonal() * molecular_to_atomic(mu1, mu2);

  std::vector<Eigen::Vector4d> draws(samples);
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  for (auto& R : draws) {
    const Eigen::Vector4d molecular{sd[0] * unit(rng), sd[1] * unit(rng), sd[2] * unit(rng),
                                    sd[3] * unit(rng)};
    R = T * molecular;
    mean += R;
  }
  mean /= static_cast<double>(samples);

  Matrix4 sum = Matrix4::Zero();
  Matrix4 sum_sq = Matrix4::Zero();
  for (const auto& R : draws) {
    const Eigen::Vector4d d = R - mean;
    const Matrix4 outer = d * d.transpose();
    sum += outer;
    sum_sq += outer.cwiseProduct(outer);
  }
  const double n = static_cast<double>(samples);
  MonteCarloCovariance out;
  out.samples = samples;
  out.mean = sum / n;
  const Matrix4 var = (sum_sq / n - out.mean.cwiseProduct(out.mean)) * (n / (n - 1.0));
  out.standard_error = (var / n).cwiseSqrt();
  return out;
}

double position_covariance(const OscillatorSystem& sys, const StateSpec& state) {
  validate(sys, state);
  const auto [gamma2, Gamma2, mu1, mu2] = scales_of(sys);
  if (std::holds_alternative<CoherentState>(state)) {
    return 0.5 / Gamma2 - mu1 * mu2 / (2.0 * gamma2);
  }
  if (const auto* number = std::get_if<NumberState>(&state)) {
    return (2.0 * number->n + 1.0) / (2.0 * Gamma2) -
           mu1 * mu2 * (2.0 * number->m + 1.0) / (2.0 * gamma2);
  }
  throw UsageError("position_covariance supports coherent and number states only");
}

}  // namespace oscillent
