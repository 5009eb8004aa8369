#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgshock/config.hpp"
#include "dgshock/mesh.hpp"
#include "dgshock/problem.hpp"
#include "dgshock/timeint.hpp"
#include "dgshock/viscosity.hpp"

namespace dgshock {

/// Exact solution in conserved variables at (x, t).
using ExactSolution = std::function<std::vector<double>(double x, double t)>;

/// Everything needed to run one simulation, validated from a Config.
struct RunSetup {
  Config config;  // resolved (preset expanded)
  ProblemDefinition problem;
  Mesh1D mesh = Mesh1D::uniform(0.0, 1.0, 1, BoundaryKind::periodic);
  int degree = 1;
  ViscosityConfig viscosity;
  ControllerOptions controller;
  double cfl = 1.0;
  ExactSolution exact;  // empty when no closed form exists
};

/// Every key understood by the harness.
const std::vector<std::string>& known_config_keys();

/// Expands presets, validates, and builds the setup. Throws ConfigError naming
/// the offending key.
RunSetup make_setup(const Config& config);

struct RunOptions {
  /// Record per-element viscosity every n-th accepted step (0 disables).
  int viscosity_every = 0;
  /// Times (ascending, within (0, T]) at which to keep copies of the state.
  std::vector<double> snapshot_times;
  /// Optional hook called for every attempted step.
  StepObserver observer;
};

struct ViscositySample {
  double t = 0.0;
  std::vector<double> raw;  // per element
};

struct RunResult {
  bool ok = true;
  std::string failure_stage;
  std::string failure_message;
  int failure_element = -1;

  FieldState initial_state;
  FieldState final_state;
  IntegrationStats stats;
  std::vector<StepRecord> steps;
  std::vector<ViscositySample> viscosity_history;
  std::vector<FieldState> snapshots;
  double nu_peak = 0.0;
  double wall_seconds = 0.0;

  /// Per-component errors against the exact solution at the final time.
  std::vector<double> l1_errors;
  std::vector<double> l2_errors;
};

RunResult simulate(const RunSetup& setup, const RunOptions& options = {});

/// Domain integral of every component.
std::vector<double> domain_integrals(const FieldState& state, const Mesh1D& mesh,
                                     const ReferenceElement& elem);

struct ConvergenceTable {
  std::vector<int> degrees;
  std::vector<int> elements;
  std::vector<double> h;
  /// errors[i][j] for degree i and refinement j; NaN marks a failed cell.
  std::vector<std::vector<double>> errors;
  std::vector<std::optional<double>> eoc;  // per degree
  std::vector<std::string> failures;
  std::string reference;  // "exact" or "self"
};

/// Runs the (N, K) schedule from `convergence.*` keys and measures the
/// `convergence.norm` error of `convergence.component` at T.
ConvergenceTable run_convergence(const Config& config);

/// Writes state.csv, steps.csv, viscosity.csv, summary.json; returns the
/// process exit code (0 ok, 3 solver failure).
int cmd_run(const Config& config, const std::string& output_dir);
/// Writes convergence.csv and convergence.json; returns the exit code.
int cmd_convergence(const Config& config, const std::string& output_dir);
/// Detector report as JSON text.
std::string cmd_detect(const std::string& function, int degree);

void write_convergence_csv(const ConvergenceTable& table, const std::string& path);

}  // namespace dgshock
