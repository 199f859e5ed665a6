#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

namespace oscillent {

/// Two harmonically coupled masses, optionally held in a harmonic trap.
///
/// The Hamiltonian separates into a relative mode of frequency omega and a
/// center-of-mass mode of frequency Omega. Every entanglement quantity in this
/// library depends on the parameters only through the inverse length scales
/// gamma = sqrt(mu*omega/hbar), Gamma = sqrt(M*Omega/hbar) and the mass
/// fractions mu1, mu2. For an untrapped molecule (Omega = 0) Gamma is the
/// width parameter of the initial center-of-mass packet instead.
///
/// Instances are immutable; construct through the static factories.
class OscillatorSystem {
 public:
  /// Physical masses and frequencies. `packet_Gamma` is required when
  /// OmegaTrap == 0 and must be absent otherwise.
  static OscillatorSystem from_physical(double m1, double m2, double omega, double OmegaTrap,
                                        double hbar = 1.0,
                                        std::optional<double> packet_Gamma = std::nullopt);

  /// Canonical gauge M = 1, hbar = 1, Gamma = 1 (so Omega = 1, omega = g).
  static OscillatorSystem from_dimensionless(double g, double mu1);

  struct MomentumRatio {
    double c;  ///< Gamma / gamma
  };
  struct RelativeScale {
    double gamma;
  };

  /// Untrapped molecule in the gauge M = 1, hbar = 1.
  static OscillatorSystem from_untrapped(MomentumRatio ratio, double Gamma, double mu1);
  static OscillatorSystem from_untrapped(RelativeScale scale, double Gamma, double mu1);

  double m1() const { return m1_; }
  double m2() const { return m2_; }
  double omega() const { return omega_; }
  double OmegaTrap() const { return Omega_; }
  double hbar() const { return hbar_; }
  double Gamma() const { return Gamma_; }
  double ell() const { return 0.0; }

  double total_mass() const { return m1_ + m2_; }
  double reduced_mass() const { return m1_ * m2_ / (m1_ + m2_); }
  double mu1() const { return mu1_; }
  double mu2() const { return mu2_; }
  double gamma() const { return gamma_; }
  double c() const { return Gamma_ / gamma_; }

  bool trapped() const { return Omega_ > 0.0; }
  /// omega / Omega; throws UsageError for an untrapped system.
  double g() const;
  /// gamma^2 / (mu1 mu2 Gamma^2); equals g for trapped systems.
  double effective_g() const { return gamma_ * gamma_ / (mu1_ * mu2_ * Gamma_ * Gamma_); }

  /// Same mass fractions and frequency ratio in the canonical gauge.
  OscillatorSystem canonical() const;

 private:
  OscillatorSystem(double m1, double m2, double omega, double Omega, double hbar, double Gamma);

  double m1_;
  double m2_;
  double omega_;
  double Omega_;
  double hbar_;
  double Gamma_;
  double mu1_;
  double mu2_;
  double gamma_;
};

/// Molecular coherent state |alpha, beta> (relative and center-of-mass displacements).
struct CoherentState {
  std::complex<double> alpha;
  std::complex<double> beta;
};

/// Joint number state |m, n>: m relative quanta, n center-of-mass quanta.
struct NumberState {
  int m = 0;
  int n = 0;
};

struct SuperpositionTerm {
  int m = 0;
  int n = 0;
  std::complex<double> coefficient;
};

/// Finite superposition sum_k c_k |m_k, n_k>; terms must be distinct and normalized.
struct Superposition {
  std::vector<SuperpositionTerm> terms;

  /// Rescales coefficients to unit norm. Throws DomainError for an empty or zero list.
  static Superposition normalized(std::vector<SuperpositionTerm> terms);
  double norm_squared() const;
};

/// Vibrational state m with a freely spreading Gaussian center-of-mass packet,
/// at dimensionless time tau = Gamma^2 hbar t / M.
struct UnboundGaussian {
  int m = 0;
  double tau = 0.0;
};

using StateSpec = std::variant<CoherentState, NumberState, Superposition, UnboundGaussian>;

/// Throws DomainError when the state is malformed (negative index, unnormalized
/// superposition) and UsageError when it is incompatible with the system.
void validate(const OscillatorSystem& sys, const StateSpec& state);

inline constexpr double kNormalizationTolerance = 1e-12;

}  // namespace oscillent
