#include "oscillent/system_model.hpp"

#include <cmath>
#include <string>

#include "oscillent/errors.hpp"

namespace oscillent {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

void require_mass_fraction(double mu1) {
  if (!(mu1 > 0.0 && mu1 < 1.0)) {
    throw DomainError("mu1 must lie in (0, 1), got " + std::to_string(mu1));
  }
}

}  // namespace

OscillatorSystem::OscillatorSystem(double m1, double m2, double omega, double Omega, double hbar,
                                   double Gamma)
    : m1_(m1), m2_(m2), omega_(omega), Omega_(Omega), hbar_(hbar), Gamma_(Gamma) {
  mu1_ = m1 / (m1 + m2);
  mu2_ = 1.0 - mu1_;
  gamma_ = std::sqrt(reduced_mass() * omega / hbar);
}

OscillatorSystem OscillatorSystem::from_physical(double m1, double m2, double omega,
                                                 double OmegaTrap, double hbar,
                                                 std::optional<double> packet_Gamma) {
  require_positive(m1, "m1");
  require_positive(m2, "m2");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  if (!(OmegaTrap >= 0.0) || !std::isfinite(OmegaTrap)) {
    throw DomainError("OmegaTrap must be non-negative, got " + std::to_string(OmegaTrap));
  }
  if (OmegaTrap > 0.0) {
    if (packet_Gamma) {
      throw DomainError("Gamma is fixed by the trap; packet_Gamma applies only to OmegaTrap = 0");
    }
    return {m1, m2, omega, OmegaTrap, hbar, std::sqrt((m1 + m2) * OmegaTrap / hbar)};
  }
  if (!packet_Gamma) {
    throw DomainError("an untrapped system needs the initial packet parameter Gamma");
  }
  require_positive(*packet_Gamma, "Gamma");
  return {m1, m2, omega, 0.0, hbar, *packet_Gamma};
}

OscillatorSystem OscillatorSystem::from_dimensionless(double g, double mu1) {
  require_positive(g, "g");
  require_mass_fraction(mu1);
  return {mu1, 1.0 - mu1, g, 1.0, 1.0, 1.0};
}

OscillatorSystem OscillatorSystem::from_untrapped(RelativeScale scale, double Gamma, double mu1) {
  require_positive(scale.gamma, "gamma");
  require_positive(Gamma, "Gamma");
  require_mass_fraction(mu1);
  const double mu2 = 1.0 - mu1;
  // gamma^2 = mu * omega / hbar with M = hbar = 1.
  const double omega = scale.gamma * scale.gamma / (mu1 * mu2);
  OscillatorSystem sys{mu1, mu2, omega, 0.0, 1.0, Gamma};
  sys.gamma_ = scale.gamma;
  return sys;
}

OscillatorSystem OscillatorSystem::from_untrapped(MomentumRatio ratio, double Gamma, double mu1) {
  require_positive(ratio.c, "c");
  require_positive(Gamma, "Gamma");
  return from_untrapped(RelativeScale{Gamma / ratio.c}, Gamma, mu1);
}

double OscillatorSystem::g() const {
  if (!trapped()) {
    throw UsageError("g = omega/Omega is undefined for an untrapped system");
  }
  return omega_ / Omega_;
}

OscillatorSystem OscillatorSystem::canonical() const {
  if (trapped()) {
    return from_dimensionless(g(), mu1_);
  }
  return from_untrapped(MomentumRatio{c()}, 1.0, mu1_);
}

Superposition Superposition::normalized(std::vector<SuperpositionTerm> terms) {
  Superposition s{std::move(terms)};
  const double norm2 = s.norm_squared();
  if (s.terms.empty() || !(norm2 > 0.0)) {
    throw DomainError("superposition needs at least one non-zero coefficient");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& t : s.terms) t.coefficient *= scale;
  return s;
}

double Superposition::norm_squared() const {
  double total = 0.0;
  for (const auto& t : terms) total += std::norm(t.coefficient);
  return total;
}

namespace {

void check_indices(int m, int n) {
  if (m < 0 || n < 0) {
    throw DomainError("quantum numbers must be non-negative, got (" + std::to_string(m) + ", " +
                      std::to_string(n) + ")");
  }
}

struct Validator {
  const OscillatorSystem& sys;

  void operator()(const CoherentState&) const {}
  void operator()(const NumberState& s) const { check_indices(s.m, s.n); }
  void operator()(const Superposition& s) const {
    if (s.terms.empty()) throw DomainError("empty superposition");
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      check_indices(s.terms[i].m, s.terms[i].n);
      for (std::size_t j = 0; j < i; ++j) {
        if (s.terms[i].m == s.terms[j].m && s.terms[i].n == s.terms[j].n) {
          throw DomainError("superposition lists |" + std::to_string(s.terms[i].m) + "," +
                            std::to_string(s.terms[i].n) + "> twice");
        }
      }
    }
    if (std::abs(s.norm_squared() - 1.0) > kNormalizationTolerance) {
      throw DomainError("superposition is not normalized: sum |c|^2 = " +
                        std::to_string(s.norm_squared()));
    }
  }
  void operator()(const UnboundGaussian& s) const {
    check_indices(s.m, 0);
    if (sys.trapped()) {
      throw UsageError("an unbound Gaussian packet requires an untrapped system (OmegaTrap = 0)");
    }
    if (!std::isfinite(s.tau)) throw DomainError("tau must be finite");
  }
};

}  // namespace

void validate(const OscillatorSystem& sys, const StateSpec& state) {
  std::visit(Validator{sys}, state);
}

}  // namespace oscillent
