#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "options.hpp"
#include "oscillent/errors.hpp"
#include "oscillent/fock_approx.hpp"
#include "oscillent/gaussian_analytic.hpp"
#include "oscillent/grid_oracle.hpp"
#include "oscillent/io.hpp"
#include "oscillent/numberstate_exact.hpp"
#include "parallel.hpp"

namespace oscillent::cli {

namespace {

struct FigureFlags {
  std::string name;
  int samples = 99;
  int grid_points = 256;
  double extent = GridSpec{}.extent_sigmas;
  std::string format = "csv";
  std::string output_dir = ".";
  std::string c_convention = "Gamma/gamma";
  int max_truncation = 5;
};

struct Panel {
  double g;
  double mu1;
};

// (g, mu1) cases of the density and convergence figures.
constexpr Panel kPanels[] = {{1.0, 0.5}, {1.0, 0.1}, {5.0, 0.5}, {5.0, 0.1}};

std::vector<double> mu1_samples(int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = double(i + 1) / (count + 1);
  return out;
}

struct Curve {
  std::string column;
  std::function<double(double mu1)> value;
};

std::string curves_csv(const std::vector<Curve>& curves, int samples, Json params) {
  const std::vector<double> mu = mu1_samples(samples);
  auto rows = parallel_map(mu.size(), [&](std::size_t i) {
    std::vector<double> row{mu[i]};
    for (const auto& c : curves) row.push_back(c.value(mu[i]));
    return row;
  });
  std::vector<std::string> columns{"mu1"};
  for (const auto& c : curves) columns.push_back(c.column);
  params["samples"] = samples;
  std::ostringstream text;
  write_csv(text, columns, rows, params.dump());
  return text.str();
}

std::string label(double value) {
  std::string text = format_double(value);
  for (char& ch : text) {
    if (ch == '.') ch = 'p';
  }
  return text;
}

int emit_densities(const FigureFlags& flags, Streams streams) {
  const bool first = flags.name == "fig1";
  const NumberState state{first ? 0 : 1, 0};
  if (flags.format != "csv" && flags.format != "binary") {
    throw UsageError("--format must be csv or binary");
  }
  const GridSpec grid = grid_from(flags.grid_points, flags.extent);
  std::filesystem::create_directories(flags.output_dir);

  const std::size_t count = std::size(kPanels);
  const auto paths = parallel_map(count, [&](std::size_t i) {
    const Panel p = kPanels[i];
    const OscillatorSystem sys = OscillatorSystem::from_dimensionless(p.g, p.mu1);
    const DensityGrid density = density_grid(sys, state, grid);
    const std::string stem =
        flags.name + "_g" + label(p.g) + "_mu1_" + label(p.mu1);
    const std::filesystem::path path =
        std::filesystem::path(flags.output_dir) / (stem + (flags.format == "csv" ? ".csv" : ".bin"));
    std::ofstream file(path, std::ios::binary);
    if (flags.format == "csv") {
      Json params = Json::object();
      params["figure"] = flags.name;
      params["state"] = "number:" + std::to_string(state.m) + "," + std::to_string(state.n);
      params["g"] = p.g;
      params["mu1"] = p.mu1;
      params["points"] = grid.n_points;
      params["extent_sigmas"] = grid.extent_sigmas;
      params["half_width"] = density.extent;
      params["units"] = "1/Gamma";
      write_density_csv(file, density, params.dump());
    } else {
      write_density_binary(file, density);
    }
    if (!file) throw UsageError("cannot write " + path.string());
    return path.string();
  });
  for (const auto& path : paths) streams.out << path << "\n";
  return 0;
}

std::string figure3(const FigureFlags& flags) {
  std::vector<Curve> curves;
  for (double g : {1.0, 10.0, 100.0, 1000.0}) {
    curves.push_back({"g" + label(g), [g](double mu1) {
                        return purity_coherent(OscillatorSystem::from_dimensionless(g, mu1));
                      }});
  }
  Json params = Json::object();
  params["figure"] = "fig3";
  params["quantity"] = "P00";
  return curves_csv(curves, flags.samples, params);
}

std::string figure4(const FigureFlags& flags) {
  const bool momentum_ratio = flags.c_convention == "Gamma/gamma";
  if (!momentum_ratio && flags.c_convention != "gamma/Gamma") {
    throw UsageError("--c-convention must be Gamma/gamma or gamma/Gamma");
  }
  std::vector<Curve> curves;
  for (double c : {1.0, 3.0, 10.0, 30.0}) {
    const double ratio = momentum_ratio ? c : 1.0 / c;
    curves.push_back({"c" + label(c), [ratio](double mu1) {
                        const auto sys = OscillatorSystem::from_untrapped(
                            OscillatorSystem::MomentumRatio{ratio}, 1.0, mu1);
                        return purity_unbound_gaussian(sys, 0.0);
                      }});
  }
  Json params = Json::object();
  params["figure"] = "fig4";
  params["quantity"] = "P0u";
  params["tau"] = 0.0;
  params["c"] = flags.c_convention;
  return curves_csv(curves, flags.samples, params);
}

std::string figure5(const FigureFlags& flags) {
  std::vector<Curve> curves;
  for (double g : {1.0, 5.0}) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 3; ++n) {
        curves.push_back({"g" + label(g) + "_m" + std::to_string(m) + "_n" + std::to_string(n),
                          [g, m, n](double mu1) {
                            return purity_number(OscillatorSystem::from_dimensionless(g, mu1), m, n);
                          }});
      }
    }
  }
  Json params = Json::object();
  params["figure"] = "fig5";
  params["quantity"] = "Pmn";
  return curves_csv(curves, flags.samples, params);
}

std::string figure6(const FigureFlags& flags) {
  struct Angle {
    const char* name;
    double theta;
  };
  const Angle angles[] = {{"0", 0.0}, {"pi6", std::numbers::pi / 6}, {"pi3", std::numbers::pi / 3}};
  std::vector<Curve> curves;
  for (double g : {1.0, 5.0}) {
    for (const Angle& a : angles) {
      const Superposition state{
          {{0, 1, std::cos(a.theta)}, {1, 0, std::sin(a.theta)}}};
      curves.push_back({"g" + label(g) + "_theta_" + a.name, [g, state](double mu1) {
                          return purity_superposition(OscillatorSystem::from_dimensionless(g, mu1),
                                                      state);
                        }});
    }
  }
  Json params = Json::object();
  params["figure"] = "fig6";
  params["state"] = "cos(theta)|0,1> + sin(theta)|1,0>";
  return curves_csv(curves, flags.samples, params);
}

std::string figure7(const FigureFlags& flags) {
  const double h = std::numbers::sqrt2 / 2;
  const std::vector<BasisChoice> bases{{h, h}, {1.0, 1.0}, {h, 1.0}, {1.0, h}};
  const auto runs = parallel_map(std::size(kPanels), [&](std::size_t i) {
    const Panel p = kPanels[i];
    return convergence_run(OscillatorSystem::from_dimensionless(p.g, p.mu1), NumberState{0, 1},
                           bases, flags.max_truncation);
  });
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (const auto& r : runs[i]) {
      rows.push_back({kPanels[i].g, kPanels[i].mu1, r.gamma1, r.gamma2,
                      double(r.jmax), double(r.kmax), r.purity, r.abs_error});
    }
  }
  Json params = Json::object();
  params["figure"] = "fig7";
  params["state"] = "number:0,1";
  params["max_truncation"] = flags.max_truncation;
  std::ostringstream text;
  write_csv(text, {"g", "mu1", "gamma1", "gamma2", "jmax", "kmax", "purity", "abs_error"}, rows,
            params.dump());
  return text.str();
}

}  // namespace

Command add_figure(CLI::App& root, Streams streams) {
  auto flags = std::make_shared<FigureFlags>();
  auto output = std::make_shared<OutputTarget>(streams.out);
  auto* app = root.add_subcommand("figure", "Data behind one figure");
  app->add_option("name", flags->name, "fig1 .. fig7")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}));
  app->add_option("--samples", flags->samples, "fig3-fig6: number of mu1 values in (0, 1)")
      ->capture_default_str();
  app->add_option("--grid-points", flags->grid_points, "fig1/fig2: points per axis")
      ->capture_default_str();
  app->add_option("--extent", flags->extent,
                  "fig1/fig2: half-width in position standard deviations")
      ->capture_default_str();
  app->add_option("--format", flags->format, "fig1/fig2: csv | binary")->capture_default_str();
  app->add_option("--output-dir", flags->output_dir, "fig1/fig2: directory for the panel files")
      ->capture_default_str();
  app->add_option("--c-convention", flags->c_convention,
                  "fig4: meaning of c, Gamma/gamma | gamma/Gamma")
      ->capture_default_str();
  app->add_option("--max-truncation", flags->max_truncation, "fig7: largest jmax = kmax")
      ->capture_default_str();
  output->add_to(*app);

  return {app, [flags, output, streams] {
            if (flags->samples < 2) throw DomainError("--samples must be >= 2");
            if (flags->max_truncation < 0) throw DomainError("--max-truncation must be >= 0");
            const std::string& name = flags->name;
            if (name == "fig1" || name == "fig2") return emit_densities(*flags, streams);
            std::string text;
            if (name == "fig3") text = figure3(*flags);
            if (name == "fig4") text = figure4(*flags);
            if (name == "fig5") text = figure5(*flags);
            if (name == "fig6") text = figure6(*flags);
            if (name == "fig7") text = figure7(*flags);
            output->write(text);
            return 0;
          }};
}

}  // namespace oscillent::cli
