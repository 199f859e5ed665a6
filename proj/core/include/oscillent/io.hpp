#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oscillent/fock_approx.hpp"
#include "oscillent/grid_oracle.hpp"

namespace oscillent {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// CSV with an optional `# params: <json>` first line. `params_json` is written
/// verbatim and must be a single line; pass an empty string to omit it.
void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows, const std::string& params_json = {});

/// Same layout with preformatted cells; cells containing a comma or quote are quoted.
void write_csv_cells(std::ostream& out, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows,
                     const std::string& params_json = {});

/// Columns x1, x2, density; coordinates in units of 1/Gamma.
void write_density_csv(std::ostream& out, const DensityGrid& grid,
                       const std::string& params_json = {});

/// One JSON header line {"n":..,"extent":..,"gamma_units":..} followed by
/// n*n little-endian float64 values in row-major order (x1 slow, x2 fast).
void write_density_binary(std::ostream& out, const DensityGrid& grid);

/// Columns gamma1, gamma2, jmax, kmax, purity, abs_error.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows,
                           const std::string& params_json = {});

}  // namespace oscillent
