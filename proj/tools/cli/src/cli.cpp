#include "oscillent_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "commands.hpp"
#include "options.hpp"
#include "oscillent/errors.hpp"

namespace oscillent::cli {

namespace {

bool mentions_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

std::string scalar_text(const Json& value, const std::string& key) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw UsageError("config key '" + key + "' must be a string, number, boolean or array");
}

std::string config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw UsageError("--config needs a file name");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

// Appends `--key value` for every config entry whose flag is absent from the
// command line, so explicit flags win.
std::vector<std::string> with_config(std::vector<std::string> args) {
  const std::string path = config_path(args);
  if (path.empty()) return args;
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read config file " + path);
  Json config;
  try {
    config = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : config.items()) {
    const std::string flag = "--" + key;
    if (key == "config" || mentions_flag(args, flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      args.push_back(flag);
      for (const auto& item : value) args.push_back(scalar_text(item, key));
    } else {
      args.push_back(flag);
      args.push_back(scalar_text(value, key));
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<std::string> expanded = with_config(args);

    CLI::App app{"Entanglement of two harmonically coupled oscillators", "oscillent"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config;
    app.add_option("--config", config, "JSON file of flag values; command-line flags win");

    const Streams streams{out, err};
    const std::vector<Command> commands{
        add_purity(app, streams),       add_covariance(app, streams),
        add_sweep(app, streams),        add_figure(app, streams),
        add_oracle_compare(app, streams), add_selftest(app, streams),
    };

    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kUsage;
    }
    for (const auto& command : commands) {
      if (command.app->parsed()) return command.execute();
    }
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace oscillent::cli
