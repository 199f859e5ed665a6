#include "oscillent/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <ostream>

#include "oscillent/errors.hpp"

namespace oscillent {

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (result.ec != std::errc{}) throw NumericalError("failed to format a floating-point value");
  return std::string(buffer.data(), result.ptr);
}

namespace {

void write_params(std::ostream& out, const std::string& params_json) {
  if (params_json.empty()) return;
  if (params_json.find('\n') != std::string::npos) {
    throw UsageError("CSV params header must be a single line");
  }
  out << "# params: " << params_json << '\n';
}

void write_cell(std::ostream& out, const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) {
    out << cell;
    return;
  }
  out << '"';
  for (char c : cell) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void write_csv_cells(std::ostream& out, const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows,
                     const std::string& params_json) {
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw UsageError("CSV row width does not match header");
  }
  write_params(out, params_json);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << ',';
    write_cell(out, columns[c]);
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      write_cell(out, row[c]);
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows, const std::string& params_json) {
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw UsageError("CSV row width does not match header");
  }
  write_params(out, params_json);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << ',';
    write_cell(out, columns[c]);
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_double(row[c]);
    }
    out << '\n';
  }
}

void write_density_csv(std::ostream& out, const DensityGrid& grid, const std::string& params_json) {
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(grid.density.size()));
  for (Eigen::Index i = 0; i < grid.density.rows(); ++i) {
    for (Eigen::Index j = 0; j < grid.density.cols(); ++j) {
      rows.push_back({grid.x1[i], grid.x2[j], grid.density(i, j)});
    }
  }
  write_csv(out, {"x1", "x2", "density"}, rows, params_json);
}

void write_density_binary(std::ostream& out, const DensityGrid& grid) {
  out << "{\"n\":" << grid.density.rows() << ",\"extent\":" << format_double(grid.extent)
      << ",\"gamma_units\":" << format_double(grid.gamma_units) << "}\n";
  for (Eigen::Index i = 0; i < grid.density.rows(); ++i) {
    for (Eigen::Index j = 0; j < grid.density.cols(); ++j) {
      auto bits = std::bit_cast<std::uint64_t>(grid.density(i, j));
      if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
      char bytes[8];
      std::memcpy(bytes, &bits, sizeof bytes);
      out.write(bytes, sizeof bytes);
    }
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows,
                           const std::string& params_json) {
  std::vector<std::vector<double>> table;
  table.reserve(rows.size());
  for (const auto& r : rows) {
    table.push_back({r.gamma1, r.gamma2, double(r.jmax), double(r.kmax), r.purity, r.abs_error});
  }
  write_csv(out, {"gamma1", "gamma2", "jmax", "kmax", "purity", "abs_error"}, table, params_json);
}

}  // namespace oscillent
