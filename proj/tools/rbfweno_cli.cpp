// rbfweno run | converge | verify

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rbfweno/harness.hpp"

namespace {

using namespace rbfweno;

// Flags are collected as text and applied on top of the config file, so both go
// through the same parser.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::string config;

  void attach(CLI::App* app, bool with_run_flags) {
    for (const char* key : {"problem", "scheme", "k", "cfl", "t-end", "euler-mode", "monotone", "out"}) {
      app->add_option(std::string("--") + key, values[key]);
    }
    if (with_run_flags) {
      app->add_option("--n", values["n"], "Cells (x cells for dmr)");
      app->add_option("--m", values["m"], "dmr y cells");
    } else {
      app->add_option("--resolutions", values["resolutions"], "Comma separated, e.g. 10,20,40");
    }
    app->add_option("--config", config, "key = value file; flags take precedence");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config.empty()) load_config_file(config, cfg);
    for (const auto& [key, value] : values) {
      if (!value.empty()) apply_setting(cfg, key, value);
    }
    return cfg;
  }
};

// Fault injection for the verify self-test: replaces one coefficient-table entry.
CoeffTables faulty_tables(const std::string& which) {
  CoeffTables t = default_coeff_tables();
  if (which == "k3-base") {
    t.rbf_k3[0].base[0] = 6.0 / 11.0;
  } else if (which == "k2-slope") {
    t.rbf_k2[1].slope[0] = 0.3;
  } else {
    throw ConfigError("unknown fault '" + which + "' (k3-base | k2-slope)");
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FD ENO / WENO-JS solver with multiquadric RBF variants"};
  app.require_subcommand(1);

  FlagSet run_flags, conv_flags;
  auto* run = app.add_subcommand("run", "Single run; writes a solution CSV and run metadata");
  run_flags.attach(run, true);
  auto* conv = app.add_subcommand("converge", "Error table over a sequence of resolutions");
  conv_flags.attach(conv, false);
  auto* verify = app.add_subcommand("verify", "Oracle and property checks");
  std::string fault;
  verify->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags.resolve(), std::cout);
    if (conv->parsed()) return cmd_converge(conv_flags.resolve(), std::cout);
    if (fault.empty()) return cmd_verify({}, std::cout);
    const CoeffTables tables = faulty_tables(fault);
    return cmd_verify({&tables}, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
