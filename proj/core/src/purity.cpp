#include "oscillent/purity.hpp"

#include <string>

#include "oscillent/errors.hpp"
#include "oscillent/gaussian_analytic.hpp"

namespace oscillent {

Method parse_method(std::string_view name) {
  if (name == "analytic") return Method::Analytic;
  if (name == "exact") return Method::Exact;
  if (name == "fock") return Method::Fock;
  if (name == "oracle") return Method::Oracle;
  throw DomainError("unknown method '" + std::string(name) +
                    "' (expected analytic, exact, fock or oracle)");
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::Analytic: return "analytic";
    case Method::Exact: return "exact";
    case Method::Fock: return "fock";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

namespace {

PurityReport value_only(double purity) {
  PurityReport report;
  report.purity = purity;
  return report;
}

PurityReport analytic(const OscillatorSystem& sys, const StateSpec& state) {
  if (std::holds_alternative<CoherentState>(state)) return value_only(purity_coherent(sys));
  if (const auto* u = std::get_if<UnboundGaussian>(&state); u && u->m == 0) {
    return value_only(purity_unbound_gaussian(sys, u->tau));
  }
  throw UsageError("the analytic method covers coherent states and unbound packets with m = 0");
}

PurityReport exact(const OscillatorSystem& sys, const StateSpec& state, const ExactLimits& limits) {
  if (std::holds_alternative<CoherentState>(state)) return value_only(purity_coherent(sys));
  if (const auto* s = std::get_if<NumberState>(&state)) {
    return value_only(purity_number(sys, s->m, s->n, limits));
  }
  if (const auto* s = std::get_if<Superposition>(&state)) {
    return value_only(purity_superposition(sys, *s, limits));
  }
  const auto& u = std::get<UnboundGaussian>(state);
  return value_only(purity_number_unbound(sys, u.m, u.tau, limits));
}

}  // namespace

PurityReport evaluate_purity(const OscillatorSystem& sys, const StateSpec& state, Method method,
                             const PurityOptions& options) {
  validate(sys, state);
  switch (method) {
    case Method::Analytic:
      return analytic(sys, state);
    case Method::Exact:
      return exact(sys, state, options.exact);
    case Method::Fock: {
      const BasisParams basis = options.basis.value_or(default_basis(sys, 20, 20));
      const Eigen::MatrixXcd rho = reduced_density_truncated(sys, state, basis, options.fock);
      return {rho.squaredNorm(), entropy_of_density(rho), std::nullopt};
    }
    case Method::Oracle: {
      const SchmidtResult r = schmidt_analyze(sys, state, options.grid);
      return {r.purity, r.entropy, r.norm_defect};
    }
  }
  throw UsageError("unknown method");
}

}  // namespace oscillent
