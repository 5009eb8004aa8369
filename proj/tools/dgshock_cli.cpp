#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgshock/config.hpp"
#include "dgshock/presets.hpp"
#include "dgshock/runner.hpp"

namespace {

constexpr int kExitValidation = 2;

dgshock::Config load_with_overrides(const std::string& path,
                                    const std::vector<std::string>& overrides) {
  dgshock::Config cfg;
  if (path.rfind("preset:", 0) == 0) {
    cfg.set("preset", path.substr(7));
  } else {
    cfg = dgshock::Config::load(path);
  }
  for (const auto& o : overrides) cfg.apply_override(o);
  return cfg;
}

std::string output_dir_for(const dgshock::Config& cfg, const std::string& flag) {
  if (!flag.empty()) return flag;
  return dgshock::resolve_config(cfg).get_string("output.directory", "dgshock-output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D nodal DG solver with modal-decay shock capturing"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output_dir;
  std::vector<std::string> overrides;
  app.add_option("--output-dir", output_dir, "Directory for result files");
  app.add_option("--override", overrides, "Configuration override key=value (repeatable)");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run one simulation");
  run->add_option("config", config_path, "Config file, or preset:<name>")->required();

  auto* conv = app.add_subcommand("convergence", "Run a refinement study");
  conv->add_option("config", config_path, "Config file, or preset:<name>")->required();

  std::string function;
  int degree = 9;
  auto* detect = app.add_subcommand("detect", "Smoothness report for a sample function");
  detect->add_option("function", function, "Sample function name")->required();
  detect->add_option("N", degree, "Polynomial degree")->required();

  app.add_subcommand("presets", "List built-in presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const dgshock::Config cfg = load_with_overrides(config_path, overrides);
      const std::string dir = output_dir_for(cfg, output_dir);
      const int code = dgshock::cmd_run(cfg, dir);
      std::cout << (code == 0 ? "run completed" : "run failed") << "; results in " << dir << "\n";
      return code;
    }
    if (conv->parsed()) {
      const dgshock::Config cfg = load_with_overrides(config_path, overrides);
      const std::string dir = output_dir_for(cfg, output_dir);
      const int code = dgshock::cmd_convergence(cfg, dir);
      std::cout << "convergence table written to " << dir << "\n";
      return code;
    }
    if (detect->parsed()) {
      std::cout << dgshock::cmd_detect(function, degree) << "\n";
      return 0;
    }
    for (const auto& name : dgshock::preset_names()) std::cout << name << "\n";
    return 0;
  } catch (const dgshock::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
