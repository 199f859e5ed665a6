#pragma once

#include <optional>
#include <string_view>

#include "oscillent/fock_approx.hpp"
#include "oscillent/grid_oracle.hpp"
#include "oscillent/numberstate_exact.hpp"
#include "oscillent/system_model.hpp"

namespace oscillent {

enum class Method { Analytic, Exact, Fock, Oracle };

Method parse_method(std::string_view name);
std::string_view method_name(Method method);

struct PurityOptions {
  ExactLimits exact;
  FockLimits fock;
  /// Truncated basis; default_basis(sys, 20, 20) when absent.
  std::optional<BasisParams> basis;
  GridSpec grid;
};

struct PurityReport {
  double purity = 0.0;
  /// Present for Fock and Oracle.
  std::optional<double> entropy;
  /// Oracle only.
  std::optional<double> norm_defect;
};

/// Analytic: coherent states and unbound packets with m = 0.
/// Exact: number states, superpositions, unbound packets (any m), coherent states.
/// Fock: number states and superpositions in a truncated basis.
/// Oracle: any state, by sampling and singular values.
PurityReport evaluate_purity(const OscillatorSystem& sys, const StateSpec& state, Method method,
                             const PurityOptions& options = {});

}  // namespace oscillent
