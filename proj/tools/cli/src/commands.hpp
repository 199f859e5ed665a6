#pragma once

#include <functional>
#include <iosfwd>

#include <CLI11.hpp>

namespace oscillent::cli {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// A registered subcommand; `execute` runs after a successful parse and
/// returns the exit code.
struct Command {
  CLI::App* app = nullptr;
  std::function<int()> execute;
};

Command add_purity(CLI::App& root, Streams streams);
Command add_covariance(CLI::App& root, Streams streams);
Command add_sweep(CLI::App& root, Streams streams);
Command add_figure(CLI::App& root, Streams streams);
Command add_oracle_compare(CLI::App& root, Streams streams);
Command add_selftest(CLI::App& root, Streams streams);

}  // namespace oscillent::cli
