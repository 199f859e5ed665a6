#pragma once

#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscillent/purity.hpp"
#include "oscillent/system_model.hpp"

namespace oscillent::cli {

using Json = nlohmann::ordered_json;

/// System given as {g, mu1}, as physical {m1, m2, omega, Omega, hbar[, Gamma]},
/// or as an untrapped molecule {c, mu1[, Gamma]}.
struct SystemFlags {
  std::optional<double> g;
  std::optional<double> mu1;
  std::optional<double> m1;
  std::optional<double> m2;
  std::optional<double> omega;
  std::optional<double> Omega;
  std::optional<double> hbar;
  std::optional<double> c;
  std::optional<double> Gamma;

  void add_to(CLI::App& app);
  OscillatorSystem build() const;
  Json params() const;
  bool dimensionless() const { return !m1 && !m2 && !c; }
  bool untrapped_ratio() const { return c.has_value(); }
};

struct MethodFlags {
  std::string method = "exact";
  int max_order = ExactLimits{}.max_number_order;
  int jmax = 20;
  int kmax = 20;
  std::optional<double> gamma1;
  std::optional<double> gamma2;
  int points = GridSpec{}.n_points;
  double extent = GridSpec{}.extent_sigmas;

  void add_to(CLI::App& app, bool with_method = true);
  PurityOptions options(const OscillatorSystem& sys) const;
  Json params() const;
};

GridSpec grid_from(int points, double extent);

/// Output stream of a subcommand: the file named by --output, or stdout.
class OutputTarget {
 public:
  explicit OutputTarget(std::ostream& fallback) : fallback_(fallback) {}
  void add_to(CLI::App& app);
  /// Writes `text` in full; throws UsageError when the file cannot be written.
  void write(const std::string& text) const;

 private:
  std::ostream& fallback_;
  std::string path_;
};

}  // namespace oscillent::cli
