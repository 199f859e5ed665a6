#include "options.hpp"

#include <fstream>
#include <ostream>

#include "oscillent/errors.hpp"

namespace oscillent::cli {

void SystemFlags::add_to(CLI::App& app) {
  auto* group = app.add_option_group("system", "Oscillator parameters");
  group->add_option("--g", g, "omega/Omega (with --mu1)");
  group->add_option("--mu1", mu1, "mass fraction m1/(m1+m2)");
  group->add_option("--m1", m1, "mass of atom 1");
  group->add_option("--m2", m2, "mass of atom 2");
  group->add_option("--omega", omega, "relative (bond) frequency");
  group->add_option("--Omega", Omega, "trap frequency; 0 for an untrapped molecule");
  group->add_option("--hbar", hbar, "Planck constant (default 1)");
  group->add_option("--c", c, "untrapped molecule: Gamma/gamma (with --mu1)");
  group->add_option("--Gamma", Gamma, "width parameter of the initial center-of-mass packet");
}

OscillatorSystem SystemFlags::build() const {
  const bool physical = m1 || m2 || omega || Omega || hbar;
  if (physical) {
    if (g || mu1 || c) throw UsageError("physical flags cannot be mixed with --g, --mu1 or --c");
    if (!m1 || !m2 || !omega || !Omega) {
      throw UsageError("physical parameters need --m1, --m2, --omega and --Omega");
    }
    return OscillatorSystem::from_physical(*m1, *m2, *omega, *Omega, hbar.value_or(1.0), Gamma);
  }
  if (c) {
    if (g) throw UsageError("--c describes an untrapped molecule and excludes --g");
    if (!mu1) throw UsageError("--c needs --mu1");
    return OscillatorSystem::from_untrapped(OscillatorSystem::MomentumRatio{*c},
                                            Gamma.value_or(1.0), *mu1);
  }
  if (Gamma) throw UsageError("--Gamma applies to untrapped molecules (--c or --Omega 0)");
  if (!g || !mu1) throw UsageError("specify the system with --g and --mu1");
  return OscillatorSystem::from_dimensionless(*g, *mu1);
}

Json SystemFlags::params() const {
  Json out = Json::object();
  auto put = [&](const char* key, const std::optional<double>& value) {
    if (value) out[key] = *value;
  };
  if (m1 || m2 || omega || Omega || hbar) {
    put("m1", m1);
    put("m2", m2);
    put("omega", omega);
    put("Omega", Omega);
    out["hbar"] = hbar.value_or(1.0);
    put("Gamma", Gamma);
  } else if (c) {
    put("c", c);
    put("mu1", mu1);
    out["Gamma"] = Gamma.value_or(1.0);
  } else {
    put("g", g);
    put("mu1", mu1);
  }
  return out;
}

void MethodFlags::add_to(CLI::App& app, bool with_method) {
  if (with_method) {
    app.add_option("--method", method, "analytic | exact | fock | oracle")
        ->capture_default_str()
        ->check(CLI::IsMember({"analytic", "exact", "fock", "oracle"}));
  }
  auto* group = app.add_option_group("method", "Method settings");
  group->add_option("--max-order", max_order, "exact method: cap on m + n")->capture_default_str();
  group->add_option("--jmax", jmax, "fock method: truncation in the first atom")
      ->capture_default_str();
  group->add_option("--kmax", kmax, "fock method: truncation in the second atom")
      ->capture_default_str();
  group->add_option("--gamma1", gamma1, "fock method: basis scale of atom 1");
  group->add_option("--gamma2", gamma2, "fock method: basis scale of atom 2");
  group->add_option("--points", points, "oracle: grid points per axis")->capture_default_str();
  group->add_option("--extent", extent, "oracle: half-width in position standard deviations")
      ->capture_default_str();
}

GridSpec grid_from(int points, double extent) {
  GridSpec grid;
  grid.n_points = points;
  grid.extent_sigmas = extent;
  validate(grid);
  return grid;
}

PurityOptions MethodFlags::options(const OscillatorSystem& sys) const {
  if (max_order < 0) throw DomainError("--max-order must be >= 0");
  if (gamma1.has_value() != gamma2.has_value()) {
    throw UsageError("--gamma1 and --gamma2 must be given together");
  }
  PurityOptions options;
  options.exact.max_number_order = max_order;
  options.exact.max_cross_order = 2 * max_order;
  BasisParams basis = default_basis(sys, jmax, kmax);
  if (gamma1) {
    basis.gamma1 = *gamma1;
    basis.gamma2 = *gamma2;
  }
  options.basis = basis;
  options.grid = grid_from(points, extent);
  return options;
}

Json MethodFlags::params() const {
  Json out = Json::object();
  out["method"] = method;
  const Method m = parse_method(method);
  if (m == Method::Fock) {
    out["jmax"] = jmax;
    out["kmax"] = kmax;
    if (gamma1) {
      out["gamma1"] = *gamma1;
      out["gamma2"] = *gamma2;
    }
  } else if (m == Method::Oracle) {
    out["points"] = points;
    out["extent"] = extent;
  }
  return out;
}

void OutputTarget::add_to(CLI::App& app) {
  app.add_option("-o,--output", path_, "write to this file instead of stdout");
}

void OutputTarget::write(const std::string& text) const {
  if (path_.empty()) {
    fallback_ << text;
    fallback_.flush();
    return;
  }
  std::ofstream file(path_, std::ios::binary);
  file << text;
  if (!file) throw UsageError("cannot write " + path_);
}

}  // namespace oscillent::cli
