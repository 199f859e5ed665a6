#include "oscillent/fock_approx.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "oscillent/errors.hpp"
#include "oscillent/taylor_coefficients.hpp"

namespace oscillent {

namespace {

void check_basis(const BasisParams& basis) {
  if (!(basis.gamma1 > 0.0) || !(basis.gamma2 > 0.0)) {
    throw DomainError("basis scales gamma1, gamma2 must be positive");
  }
  if (basis.jmax < 0 || basis.kmax < 0) throw DomainError("truncation bounds must be >= 0");
}

void check_order(int total, const FockLimits& limits) {
  if (total > limits.max_total_order) {
    throw ResourceError("j + k + m + n = " + std::to_string(total) +
                        " exceeds the configured cap " + std::to_string(limits.max_total_order));
  }
}

struct Component {
  int m;
  int n;
  std::complex<double> coefficient;
};

std::vector<Component> components_of(const OscillatorSystem& sys, const StateSpec& state) {
  validate(sys, state);
  if (const auto* number = std::get_if<NumberState>(&state)) {
    return {{number->m, number->n, 1.0}};
  }
  if (const auto* sup = std::get_if<Superposition>(&state)) {
    std::vector<Component> out;
    for (const auto& t : sup->terms) out.push_back({t.m, t.n, t.coefficient});
    return out;
  }
  throw UsageError("the truncated basis method supports number states and superpositions");
}

}  // namespace

BasisParams default_basis(const OscillatorSystem& sys, int jmax, int kmax) {
  const double gamma2 = sys.gamma() * sys.gamma();
  const double Gamma2 = sys.Gamma() * sys.Gamma();
  const double s = std::pow((gamma2 + Gamma2 * sys.mu1() * sys.mu1()) /
                                (gamma2 + Gamma2 * sys.mu2() * sys.mu2()),
                            0.25);
  const double root = std::sqrt(sys.gamma() * sys.Gamma());
  return {root * s, root / s, jmax, kmax};
}

RealGenerator basis_transform_generator(const OscillatorSystem& sys, double gamma1,
                                        double gamma2) {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0)) {
    throw DomainError("basis scales gamma1, gamma2 must be positive");
  }
  const double g = sys.gamma();
  const double G = sys.Gamma();
  const double mu1 = sys.mu1();
  const double mu2 = sys.mu2();
  const double g2 = g * g;
  const double G2 = G * G;
  const double a1 = gamma1 * gamma1;
  const double a2 = gamma2 * gamma2;

  // F = p11 b1^2 + 2 p12 b1 b2 + p22 b2^2 with b1 = e1.w, b2 = e2.w and
  // w = (tau1, tau2, alpha, beta).
  const Eigen::Vector4d e1{gamma1, 0.0, g, mu1 * G};
  const Eigen::Vector4d e2{0.0, gamma2, -g, mu2 * G};
  const double p11 = g2 + mu2 * mu2 * G2 + a2;
  const double p12 = g2 - mu1 * mu2 * G2;
  const double p22 = g2 + mu1 * mu1 * G2 + a1;
  const double Z = g2 * G2 + mu2 * mu2 * a1 * G2 + mu1 * mu1 * a2 * G2 + a1 * a2 + g2 * (a1 + a2);

  const Eigen::Matrix4d F = p11 * e1 * e1.transpose() +
                            p12 * (e1 * e2.transpose() + e2 * e1.transpose()) +
                            p22 * e2 * e2.transpose();
  RealGenerator gen;
  gen.M = F / Z - 0.5 * Eigen::Matrix4d::Identity();
  gen.prefactor = std::sqrt(4.0 * gamma1 * gamma2 * g * G / Z);
  return gen;
}

double transform_coefficient(const OscillatorSystem& sys, const BasisParams& basis, int j, int k,
                             int m, int n, const FockLimits& limits) {
  check_basis(basis);
  if (j < 0 || k < 0 || m < 0 || n < 0) throw DomainError("negative basis index");
  check_order(j + k + m + n, limits);
  if ((j + k + m + n) % 2 != 0) return 0.0;
  const RealGenerator gen = basis_transform_generator(sys, basis.gamma1, basis.gamma2);
  const TaylorBox<double> box(gen.M, {j, k, m, n});
  return gen.prefactor * box.normalized({j, k, m, n});
}

CoeffTable::CoeffTable(const OscillatorSystem& sys, const BasisParams& basis, int m, int n,
                       const FockLimits& limits)
    : m_(m), n_(n) {
  check_basis(basis);
  if (m < 0 || n < 0) throw DomainError("negative quantum number");
  check_order(basis.jmax + basis.kmax + m + n, limits);
  const RealGenerator gen = basis_transform_generator(sys, basis.gamma1, basis.gamma2);
  const TaylorBox<double> box(gen.M, {basis.jmax, basis.kmax, m, n});
  entries_.resize(basis.jmax + 1, basis.kmax + 1);
  for (int j = 0; j <= basis.jmax; ++j) {
    for (int k = 0; k <= basis.kmax; ++k) {
      entries_(j, k) = gen.prefactor * box.normalized({j, k, m, n});
    }
  }
}

double CoeffTable::completeness_defect() const {
  return std::abs(1.0 - entries_.squaredNorm());
}

Eigen::MatrixXcd truncated_amplitudes(const OscillatorSystem& sys, const StateSpec& state,
                                      const BasisParams& basis, const FockLimits& limits) {
  check_basis(basis);
  const auto components = components_of(sys, state);
  int max_m = 0;
  int max_n = 0;
  for (const auto& c : components) {
    max_m = std::max(max_m, c.m);
    max_n = std::max(max_n, c.n);
  }
  check_order(basis.jmax + basis.kmax + max_m + max_n, limits);
  const RealGenerator gen = basis_transform_generator(sys, basis.gamma1, basis.gamma2);
  const TaylorBox<double> box(gen.M, {basis.jmax, basis.kmax, max_m, max_n});

  Eigen::MatrixXcd amplitudes = Eigen::MatrixXcd::Zero(basis.jmax + 1, basis.kmax + 1);
  for (int j = 0; j <= basis.jmax; ++j) {
    for (int k = 0; k <= basis.kmax; ++k) {
      std::complex<double> acc{0.0};
      for (const auto& c : components) {
        acc += c.coefficient * box.normalized({j, k, c.m, c.n});
      }
      amplitudes(j, k) = gen.prefactor * acc;
    }
  }
  return amplitudes;
}

Eigen::MatrixXcd reduced_density_truncated(const OscillatorSystem& sys, const StateSpec& state,
                                           const BasisParams& basis, const FockLimits& limits) {
  const Eigen::MatrixXcd C = truncated_amplitudes(sys, state, basis, limits);
  return C * C.adjoint();
}

double purity_truncated(const OscillatorSystem& sys, const StateSpec& state,
                        const BasisParams& basis, const FockLimits& limits) {
  // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return reduced_density_truncated(sys, state, basis, limits).squaredNorm();
}

double entropy_of_density(const Eigen::MatrixXcd& rho) {
  const double trace = rho.trace().real();
  if (!(trace > 0.0)) throw NumericalError("reduced density matrix has non-positive trace");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho / trace,
                                                               Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()[i];
    if (p < 1e-14) continue;
    entropy -= p * std::log(p);
  }
  return std::max(0.0, entropy);
}

double entropy_truncated(const OscillatorSystem& sys, const StateSpec& state,
                         const BasisParams& basis, const FockLimits& limits) {
  return entropy_of_density(reduced_density_truncated(sys, state, basis, limits));
}

std::vector<ConvergenceRow> convergence_run(const OscillatorSystem& sys, const StateSpec& state,
                                            const std::vector<BasisChoice>& bases,
                                            int max_truncation, const FockLimits& limits) {
  if (max_truncation < 0) throw DomainError("max_truncation must be >= 0");
  double exact = 0.0;
  if (const auto* number = std::get_if<NumberState>(&state)) {
    exact = purity_number(sys, number->m, number->n);
  } else if (const auto* sup = std::get_if<Superposition>(&state)) {
    exact = purity_superposition(sys, *sup);
  } else {
    throw UsageError("convergence_run supports number states and superpositions");
  }

  std::vector<ConvergenceRow> rows;
  rows.reserve(bases.size() * static_cast<std::size_t>(max_truncation + 1));
  for (const auto& choice : bases) {
    const BasisParams full{choice.gamma1, choice.gamma2, max_truncation, max_truncation};
    const Eigen::MatrixXcd C = truncated_amplitudes(sys, state, full, limits);
    for (int t = 0; t <= max_truncation; ++t) {
      const auto block = C.topLeftCorner(t + 1, t + 1);
      const Eigen::MatrixXcd rho = block * block.adjoint();
      const double purity = rho.squaredNorm();
      rows.push_back({choice.gamma1, choice.gamma2, t, t, purity, std::abs(purity - exact)});
    }
  }
  return rows;
}

}  // namespace oscillent
