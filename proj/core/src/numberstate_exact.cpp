#include "oscillent/numberstate_exact.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "oscillent/errors.hpp"
#include "oscillent/gaussian_analytic.hpp"
#include "oscillent/taylor_coefficients.hpp"

namespace oscillent {

namespace {

using cd = std::complex<double>;

// Position pairs (index into z = (x1, x1', x2, x2')) of the four factors of
// the purity integral: Phi(x1,x2) Phi*(x1',x2) Phi(x1',x2') Phi*(x1,x2').
constexpr std::array<std::array<int, 2>, 4> kSlotPositions{{{0, 2}, {1, 2}, {1, 3}, {0, 3}}};

constexpr std::size_t kMaxBoxEntries = 50'000'000;

// Sum over slots of gamma^2 (xa - xb)^2 / 2 + k_s (mu1 xa + mu2 xb)^2 / 2, where
// k_s is the center-of-mass Gaussian coefficient of slot s.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> assemble_A(double gamma2, const std::array<Scalar, 4>& k, double mu1,
                                       double mu2) {
  Eigen::Matrix<Scalar, 4, 4> A = Eigen::Matrix<Scalar, 4, 4>::Zero();
  for (int s = 0; s < 4; ++s) {
    const int a = kSlotPositions[s][0];
    const int b = kSlotPositions[s][1];
    A(a, a) += 0.5 * (gamma2 + k[s] * mu1 * mu1);
    A(b, b) += 0.5 * (gamma2 + k[s] * mu2 * mu2);
    const Scalar off = 0.5 * (-gamma2 + k[s] * mu1 * mu2);
    A(a, b) += off;
    A(b, a) += off;
  }
  return A;
}

Eigen::Matrix<double, 4, 8> assemble_L(const OscillatorSystem& sys, bool with_center_of_mass) {
  const double root2 = std::sqrt(2.0);
  Eigen::Matrix<double, 4, 8> L = Eigen::Matrix<double, 4, 8>::Zero();
  for (int s = 0; s < 4; ++s) {
    const int a = kSlotPositions[s][0];
    const int b = kSlotPositions[s][1];
    L(a, s) += root2 * sys.gamma();
    L(b, s) -= root2 * sys.gamma();
    if (with_center_of_mass) {
      L(a, 4 + s) += root2 * sys.Gamma() * sys.mu1();
      L(b, 4 + s) += root2 * sys.Gamma() * sys.mu2();
    }
  }
  return L;
}

template <typename Scalar>
QuadraticGenerator<Scalar> generator_from_integral(const GaussianIntegralData<Scalar>& data) {
  const Eigen::PartialPivLU<Eigen::Matrix<Scalar, 4, 4>> lu(data.A);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-10)) {
    std::ostringstream msg;
    msg << "Gaussian integral matrix is ill-conditioned: cond ~ "
        << (rcond > 0 ? 1.0 / rcond : std::numeric_limits<double>::infinity());
    throw NumericalError(msg.str());
  }
  const Eigen::Matrix<Scalar, 4, 8> L = data.Lmap.template cast<Scalar>();
  const Eigen::Matrix<Scalar, 4, 8> AinvL = lu.solve(L);
  QuadraticGenerator<Scalar> gen;
  gen.M = 0.25 * (L.transpose() * AinvL) + data.Cquad.template cast<Scalar>();
  // Symmetrize away rounding so the Taylor recurrence sees an exactly symmetric form.
  gen.M = (0.5 * (gen.M + gen.M.transpose())).eval();
  gen.prefactor = data.prefactor / std::sqrt(Scalar(lu.determinant()));
  return gen;
}

void check_number_cap(int order, const ExactLimits& limits) {
  if (order > limits.max_number_order) {
    throw ResourceError("m + n = " + std::to_string(order) + " exceeds the configured cap " +
                        std::to_string(limits.max_number_order));
  }
}

void check_box(std::span<const int> orders) {
  if (taylor_box_size(orders) > kMaxBoxEntries) {
    throw ResourceError("coefficient table would need more than " +
                        std::to_string(kMaxBoxEntries) + " entries");
  }
}

}  // namespace

RealGenerator build_M(const OscillatorSystem& sys, MDenominator denominator) {
  const double gamma2 = sys.gamma() * sys.gamma();
  const double Gamma2 = sys.Gamma() * sys.Gamma();
  const double mu1 = sys.mu1();
  const double mu2 = sys.mu2();
  const double gG = sys.gamma() * sys.Gamma();
  const double D = denominator == MDenominator::SquaredFractions
                       ? 4.0 * (gamma2 + Gamma2 * mu1 * mu1) * (gamma2 + Gamma2 * mu2 * mu2)
                       : 4.0 * (gamma2 + Gamma2 * mu1) * (gamma2 + Gamma2 * mu2);
  const double mixed = Gamma2 * Gamma2 * mu1 * mu1 * mu2 * mu2;
  const double u = (gamma2 * gamma2 - mixed) / D;
  const double v = (gamma2 * gamma2 + 2.0 * gamma2 * Gamma2 * mu1 * mu1 + mixed) / D;
  const double w = (gamma2 * gamma2 + 2.0 * gamma2 * Gamma2 * mu2 * mu2 + mixed) / D;
  const double s = gG * (gamma2 - Gamma2 * mu1 * mu2) * (mu1 - mu2) / D;
  const double t = gG * (gamma2 + Gamma2 * mu1 * mu2) / D;

  RealGenerator gen;
  gen.M.resize(8, 8);
  // clang-format off
  gen.M <<  u,  v, -u,  w,  s, -t, -s,  t,
            v,  u,  w, -u, -t,  s,  t, -s,
           -u,  w,  u,  v, -s,  t,  s, -t,
            w, -u,  v,  u,  t, -s, -t,  s,
            s, -t, -s,  t, -u,  w,  u,  v,
           -t,  s,  t, -s,  w, -u,  v,  u,
           -s,  t,  s, -t,  u,  v, -u,  w,
            t, -s, -t,  s,  v,  u,  w, -u;
  // clang-format on
  gen.prefactor = purity_coherent(sys);
  return gen;
}

GaussianIntegralData<double> build_A(const OscillatorSystem& sys) {
  const double Gamma2 = sys.Gamma() * sys.Gamma();
  GaussianIntegralData<double> data;
  data.A = assemble_A<double>(sys.gamma() * sys.gamma(), {Gamma2, Gamma2, Gamma2, Gamma2},
                              sys.mu1(), sys.mu2());
  data.Lmap = assemble_L(sys, true);
  data.Cquad = -0.5 * Eigen::Matrix<double, 8, 8>::Identity();
  data.prefactor = sys.gamma() * sys.gamma() * Gamma2;
  return data;
}

GaussianIntegralData<cd> build_At(const OscillatorSystem& sys, double tau) {
  if (sys.trapped()) {
    throw UsageError("build_At describes a spreading packet and needs an untrapped system");
  }
  const double Gamma2 = sys.Gamma() * sys.Gamma();
  // phi_u(x, tau) ~ exp(-Gamma^2 x^2 / (2 (1 - i tau))); conjugated slots take k*.
  const cd k = Gamma2 / cd(1.0, -tau);
  GaussianIntegralData<cd> data;
  data.A = assemble_A<cd>(sys.gamma() * sys.gamma(), {k, std::conj(k), k, std::conj(k)},
                          sys.mu1(), sys.mu2());
  data.Lmap = assemble_L(sys, false);
  data.Cquad = -0.5 * Eigen::Matrix<double, 8, 8>::Identity();
  // |1/sqrt(1 + i tau)|^4 from the packet normalization.
  data.prefactor = sys.gamma() * sys.gamma() * Gamma2 / (1.0 + tau * tau);
  return data;
}

RealGenerator build_M_from_A(const GaussianIntegralData<double>& data) {
  return generator_from_integral(data);
}

ComplexGenerator build_M_from_A(const GaussianIntegralData<cd>& data) {
  return generator_from_integral(data);
}

double purity_number(const OscillatorSystem& sys, int m, int n, const ExactLimits& limits) {
  validate(sys, NumberState{m, n});
  check_number_cap(m + n, limits);
  const RealGenerator gen = build_M(sys);
  const std::vector<int> orders{m, m, m, m, n, n, n, n};
  check_box(orders);
  const TaylorBox<double> box(gen.M, orders);
  return gen.prefactor * box.normalized(orders);
}

double purity_number_unbound(const OscillatorSystem& sys, int m, double tau,
                             const ExactLimits& limits) {
  validate(sys, UnboundGaussian{m, tau});
  check_number_cap(m, limits);
  const ComplexGenerator gen = build_M_from_A(build_At(sys, tau));
  const std::vector<int> orders{m, m, m, m, 0, 0, 0, 0};
  const TaylorBox<cd> box(gen.M, orders);
  const cd value = gen.prefactor * box.normalized(orders);
  if (std::abs(value.imag()) > 1e-8) {
    throw NumericalError("unbound purity has imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

double purity_cross(const OscillatorSystem& sys, const std::array<SlotIndex, 4>& slots,
                    const ExactLimits& limits) {
  int total = 0;
  std::vector<int> orders(8);
  for (int i = 0; i < 4; ++i) {
    if (slots[i].m < 0 || slots[i].n < 0) throw DomainError("negative slot index");
    orders[i] = slots[i].m;
    orders[4 + i] = slots[i].n;
    total += slots[i].m + slots[i].n;
  }
  if (total > limits.max_cross_order) {
    throw ResourceError("sum of slot orders " + std::to_string(total) +
                        " exceeds the configured cap " + std::to_string(limits.max_cross_order));
  }
  if (total % 2 != 0) return 0.0;
  const RealGenerator gen = build_M(sys);
  const TaylorBox<double> box(gen.M, orders);
  return gen.prefactor * box.normalized(orders);
}

double purity_superposition(const OscillatorSystem& sys, const Superposition& state,
                            const ExactLimits& limits) {
  validate(sys, state);
  int max_m = 0;
  int max_n = 0;
  int max_order = 0;
  for (const auto& term : state.terms) {
    max_m = std::max(max_m, term.m);
    max_n = std::max(max_n, term.n);
    max_order = std::max(max_order, term.m + term.n);
  }
  if (4 * max_order > limits.max_cross_order) {
    throw ResourceError("superposition needs cross terms of order " +
                        std::to_string(4 * max_order) + ", above the configured cap " +
                        std::to_string(limits.max_cross_order));
  }
  const RealGenerator gen = build_M(sys);
  const std::vector<int> box_orders{max_m, max_m, max_m, max_m, max_n, max_n, max_n, max_n};
  check_box(box_orders);
  const TaylorBox<double> box(gen.M, box_orders);

  // Fixed iteration order keeps the reduction bit-stable.
  const auto& terms = state.terms;
  cd total{0.0};
  std::array<int, 8> index{};
  for (const auto& t1 : terms) {
    for (const auto& t2 : terms) {
      const cd c12 = t1.coefficient * std::conj(t2.coefficient);
      for (const auto& t3 : terms) {
        const cd c123 = c12 * t3.coefficient;
        for (const auto& t4 : terms) {
          index = {t1.m, t2.m, t3.m, t4.m, t1.n, t2.n, t3.n, t4.n};
          const double d = box.normalized(index);
          if (d == 0.0) continue;
          total += c123 * std::conj(t4.coefficient) * d;
        }
      }
    }
  }
  total *= gen.prefactor;
  if (std::abs(total.imag()) > 1e-10) {
    throw NumericalError("superposition purity has imaginary residue " +
                         std::to_string(total.imag()));
  }
  return total.real();
}

PurityExtremum maximize_superposition_purity(double g, const Superposition& state, double lo,
                                             double hi, const ExactLimits& limits) {
  if (!(0.0 < lo && lo < hi && hi < 1.0)) throw DomainError("need 0 < lo < hi < 1");
  auto negative_purity = [&](double mu1) {
    return -purity_superposition(OscillatorSystem::from_dimensionless(g, mu1), state, limits);
  };
  const auto [mu1, value] = boost::math::tools::brent_find_minima(
      negative_purity, lo, hi, std::numeric_limits<double>::digits / 2);
  return {mu1, -value};
}

}  // namespace oscillent
