#include "commands.hpp"

#include <cmath>
#include <memory>
#include <ostream>
#include <sstream>

#include "criteria.hpp"
#include "options.hpp"
#include "oscillent/errors.hpp"
#include "oscillent/gaussian_analytic.hpp"
#include "oscillent/io.hpp"
#include "parallel.hpp"
#include "parsing.hpp"

namespace oscillent::cli {

namespace {

constexpr int kNumericalExit = 2;

struct StateFlags {
  std::string text;
  std::optional<double> theta;

  void add_to(CLI::App& app, bool required) {
    auto* opt = app.add_option("--state", text,
                               "coherent[:ar,ai,br,bi] | number:m,n | sup:m,n,re[,im];... | "
                               "unbound:m[,tau] | theta:m1,n1;m2,n2");
    if (required) opt->required();
    app.add_option("--theta", theta, "mixing angle for theta: states (radians)");
  }

  StateSpec parse() const {
    if (is_theta_state(text)) {
      if (!theta) throw UsageError("theta: states need --theta");
      return parse_state(text, *theta);
    }
    if (theta) throw UsageError("--theta applies only to theta: states");
    return parse_state(text);
  }
};

Json matrix_json(const Matrix4& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::string csv_text(const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows, const Json& params) {
  std::ostringstream text;
  write_csv(text, columns, rows, params.dump());
  return text.str();
}

void warn_norm_defect(std::ostream& err, double defect) {
  err << "warning: oracle norm defect " << format_double(defect)
      << " exceeds " << format_double(kNormDefectWarning) << "; increase --extent\n";
}

}  // namespace

Command add_purity(CLI::App& root, Streams streams) {
  struct Flags {
    SystemFlags system;
    MethodFlags method;
    StateFlags state;
    OutputTarget output;
  };
  auto flags = std::make_shared<Flags>(Flags{{}, {}, {}, OutputTarget(streams.out)});
  auto* app = root.add_subcommand("purity", "Purity of one state as a JSON record");
  flags->system.add_to(*app);
  flags->method.add_to(*app);
  flags->state.add_to(*app, true);
  flags->output.add_to(*app);

  return {app, [flags, streams] {
            const OscillatorSystem sys = flags->system.build();
            const StateSpec state = flags->state.parse();
            const Method method = parse_method(flags->method.method);
            const PurityReport report =
                evaluate_purity(sys, state, method, flags->method.options(sys));
            Json record = Json::object();
            record["purity"] = report.purity;
            if (report.entropy) record["entropy"] = *report.entropy;
            if (report.norm_defect) record["norm_defect"] = *report.norm_defect;
            record["state"] = flags->state.text;
            if (flags->state.theta) record["theta"] = *flags->state.theta;
            record["params"] = flags->system.params();
            record["method"] = flags->method.params();
            flags->output.write(record.dump() + "\n");
            if (report.norm_defect && *report.norm_defect > kNormDefectWarning) {
              warn_norm_defect(streams.err, *report.norm_defect);
              return kNumericalExit;
            }
            return 0;
          }};
}

Command add_covariance(CLI::App& root, Streams streams) {
  struct Flags {
    SystemFlags system;
    OutputTarget output;
  };
  auto flags = std::make_shared<Flags>(Flags{{}, OutputTarget(streams.out)});
  auto* app = root.add_subcommand("covariance", "Ground/coherent state covariance matrices as JSON");
  flags->system.add_to(*app);
  flags->output.add_to(*app);

  return {app, [flags] {
            const OscillatorSystem sys = flags->system.build();
            const CovariancePack pack = covariance_coherent(sys);
            Json record = Json::object();
            record["V"] = matrix_json(pack.V);
            record["Vprime"] = matrix_json(pack.Vprime);
            record["S"] = matrix_json(pack.S);
            record["r"] = pack.r;
            record["logneg"] = pack.logneg;
            record["scaler_s"] = pack.scaler_s;
            record["purity"] = purity_coherent(sys);
            record["params"] = flags->system.params();
            flags->output.write(record.dump() + "\n");
            return 0;
          }};
}

Command add_sweep(CLI::App& root, Streams streams) {
  struct Flags {
    SystemFlags system;
    MethodFlags method;
    StateFlags state;
    std::string param;
    std::string range;
    OutputTarget output;
  };
  auto flags = std::make_shared<Flags>(Flags{{}, {}, {}, {}, {}, OutputTarget(streams.out)});
  auto* app = root.add_subcommand("sweep", "Purity over a one-parameter range as CSV");
  app->add_option("--param", flags->param, "swept parameter")
      ->required()
      ->check(CLI::IsMember({"g", "mu1", "tau", "theta", "c"}));
  app->add_option("--range", flags->range, "start:stop:count[:lin|log]")->required();
  flags->system.add_to(*app);
  flags->method.add_to(*app);
  app->add_option("--state", flags->state.text, "state, as for purity")->required();
  app->add_option("--theta", flags->state.theta, "mixing angle for theta: states");
  flags->output.add_to(*app);

  return {app, [flags, streams] {
            const SweepRange range = parse_range(flags->range);
            const std::string& param = flags->param;
            const bool theta_state = is_theta_state(flags->state.text);
            if (param == "theta" && !theta_state) {
              throw UsageError("--param theta needs a theta: state");
            }
            if (param != "theta" && theta_state && !flags->state.theta) {
              throw UsageError("theta: states need --theta unless theta is swept");
            }
            const StateSpec base_state = param == "theta" || (theta_state && !flags->state.theta)
                                             ? parse_state(flags->state.text, 0.0)
                                             : flags->state.parse();
            if (param == "tau" && !std::holds_alternative<UnboundGaussian>(base_state)) {
              throw UsageError("--param tau needs an unbound: state");
            }
            if ((param == "g" || param == "mu1") && !flags->system.dimensionless() &&
                !(param == "mu1" && flags->system.untrapped_ratio())) {
              throw UsageError("--param " + param + " needs the system given by --g/--mu1" +
                               (param == "mu1" ? " or --c/--mu1" : ""));
            }
            if (param == "c" && !flags->system.untrapped_ratio()) {
              throw UsageError("--param c needs an untrapped system given by --c/--mu1");
            }
            const Method method = parse_method(flags->method.method);

            auto system_at = [&](double value) {
              SystemFlags s = flags->system;
              if (param == "g") s.g = value;
              if (param == "mu1") s.mu1 = value;
              if (param == "c") s.c = value;
              return s.build();
            };
            auto state_at = [&](double value) -> StateSpec {
              if (param == "theta") return parse_state(flags->state.text, value);
              if (param == "tau") {
                UnboundGaussian u = std::get<UnboundGaussian>(base_state);
                u.tau = value;
                return u;
              }
              return base_state;
            };
            // Validate the fixed parameters once, before dispatch.
            (void)system_at(range.start);

            const std::vector<double> values = range.values();
            const auto reports = parallel_map(values.size(), [&](std::size_t i) {
              const OscillatorSystem sys = system_at(values[i]);
              return evaluate_purity(sys, state_at(values[i]), method, flags->method.options(sys));
            });

            std::vector<std::string> columns{param, "purity"};
            const bool has_entropy = reports.front().entropy.has_value();
            const bool has_defect = reports.front().norm_defect.has_value();
            if (has_entropy) columns.push_back("entropy");
            if (has_defect) columns.push_back("norm_defect");
            std::vector<std::vector<double>> rows;
            double worst_defect = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i) {
              std::vector<double> row{values[i], reports[i].purity};
              if (has_entropy) row.push_back(*reports[i].entropy);
              if (has_defect) {
                row.push_back(*reports[i].norm_defect);
                worst_defect = std::max(worst_defect, *reports[i].norm_defect);
              }
              rows.push_back(std::move(row));
            }

            Json params = Json::object();
            params["param"] = param;
            params["range"] = flags->range;
            params["state"] = flags->state.text;
            if (flags->state.theta && param != "theta") params["theta"] = *flags->state.theta;
            params["system"] = flags->system.params();
            params["method"] = flags->method.params();
            flags->output.write(csv_text(columns, rows, params));
            if (worst_defect > kNormDefectWarning) {
              warn_norm_defect(streams.err, worst_defect);
              return kNumericalExit;
            }
            return 0;
          }};
}

Command add_oracle_compare(CLI::App& root, Streams streams) {
  struct Flags {
    SystemFlags system;
    StateFlags state;
    int points = GridSpec{}.n_points;
    double extent = GridSpec{}.extent_sigmas;
    double tolerance = 1e-6;
    OutputTarget output;
  };
  auto flags = std::make_shared<Flags>(Flags{{}, {}, GridSpec{}.n_points, GridSpec{}.extent_sigmas,
                                             1e-6, OutputTarget(streams.out)});
  auto* app = root.add_subcommand("oracle-compare",
                                  "Residuals of the closed-form methods against the grid oracle");
  flags->system.add_to(*app);
  flags->state.add_to(*app, false);
  app->footer("Without --state the built-in test set is compared.");
  app->add_option("--points", flags->points, "grid points per axis")->capture_default_str();
  app->add_option("--extent", flags->extent, "half-width in position standard deviations")
      ->capture_default_str();
  app->add_option("--tolerance", flags->tolerance, "largest accepted |residual|")
      ->capture_default_str();
  flags->output.add_to(*app);

  return {app, [flags, streams] {
            struct Case {
              std::string label;
              OscillatorSystem sys;
              StateSpec state;
              std::vector<Method> methods;
            };
            std::vector<Case> cases;
            if (!flags->state.text.empty()) {
              const OscillatorSystem sys = flags->system.build();
              cases.push_back({flags->state.text, sys, flags->state.parse(),
                               {Method::Analytic, Method::Exact}});
            } else {
              for (const auto& c : acceptance::shared_test_set()) {
                cases.push_back({c.label, c.system(), c.state, c.reference_methods()});
              }
            }
            PurityOptions options;
            options.grid = grid_from(flags->points, flags->extent);

            struct Row {
              std::string label;
              Method method;
              double purity;
              double oracle;
              double norm_defect;
            };
            const auto per_case = parallel_map(cases.size(), [&](std::size_t i) {
              const Case& c = cases[i];
              const SchmidtResult oracle = schmidt_analyze(c.sys, c.state, options.grid);
              std::vector<Row> rows;
              for (Method m : c.methods) {
                double value = 0.0;
                try {
                  value = evaluate_purity(c.sys, c.state, m, options).purity;
                } catch (const UsageError&) {
                  continue;  // method does not apply to this state
                }
                rows.push_back({c.label, m, value, oracle.purity, oracle.norm_defect});
              }
              return rows;
            });

            std::vector<std::vector<std::string>> cells;
            double worst = 0.0;
            double worst_defect = 0.0;
            for (const auto& rows : per_case) {
              for (const auto& r : rows) {
                const double residual = r.purity - r.oracle;
                worst = std::max(worst, std::abs(residual));
                worst_defect = std::max(worst_defect, r.norm_defect);
                cells.push_back({r.label, std::string(method_name(r.method)),
                                 format_double(r.purity), format_double(r.oracle),
                                 format_double(residual), format_double(r.norm_defect)});
              }
            }
            Json params = Json::object();
            params["points"] = flags->points;
            params["extent"] = flags->extent;
            params["tolerance"] = flags->tolerance;
            if (!flags->state.text.empty()) params["system"] = flags->system.params();
            std::ostringstream text;
            write_csv_cells(text,
                            {"case", "method", "purity", "oracle_purity", "residual", "norm_defect"},
                            cells, params.dump());
            flags->output.write(text.str());

            streams.err << cells.size() << " comparisons, max |residual| = " << format_double(worst)
                        << "\n";
            int code = 0;
            if (worst > flags->tolerance) {
              streams.err << "error: residual exceeds tolerance " << format_double(flags->tolerance)
                          << "\n";
              code = kNumericalExit;
            }
            if (worst_defect > kNormDefectWarning) {
              warn_norm_defect(streams.err, worst_defect);
              code = kNumericalExit;
            }
            return code;
          }};
}

Command add_selftest(CLI::App& root, Streams streams) {
  auto only = std::make_shared<std::vector<int>>();
  auto* app = root.add_subcommand("selftest", "Run the acceptance criteria");
  app->add_option("--criterion", *only, "run only these criterion ids");

  return {app, [only, streams] {
            const auto results = acceptance::run_criteria(*only);
            int failed = 0;
            for (const auto& r : results) {
              streams.out << acceptance::format_result(r) << "\n";
              if (!r.passed) ++failed;
            }
            streams.out << results.size() << " criteria, " << failed << " failed\n";
            return failed == 0 ? 0 : kNumericalExit;
          }};
}

}  // namespace oscillent::cli
