#include "dgshock/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "dgshock/corpus.hpp"
#include "dgshock/error_norms.hpp"
#include "dgshock/presets.hpp"
#include "dgshock/riemann.hpp"
#include "dgshock/wave_exact.hpp"

namespace dgshock {

namespace {

using json = nlohmann::json;

double wrap(double x, double a, double length) {
  double y = std::fmod(x - a, length);
  if (y < 0.0) y += length;
  return a + y;
}

Primitive primitive_from(const Config& cfg, const std::string& key) {
  const std::vector<double> v = cfg.get_doubles(key);
  if (v.size() != 3) throw ConfigError(key, "expected three values (rho, u, p)");
  if (!(v[0] > 0.0) || !(v[2] > 0.0))
    throw ConfigError(key, "density and pressure must be positive");
  return {v[0], v[1], v[2]};
}

std::vector<double> conserved_vector(const Primitive& w, double gamma) {
  const EulerState c = euler_conserved(w, gamma);
  return {c[0], c[1], c[2]};
}

/// Builds the initial condition and, where one exists, the exact solution.
void build_initial(const Config& cfg, RunSetup& setup) {
  ProblemDefinition& p = setup.problem;
  const std::string ic = cfg.get_string("problem.ic");
  p.ic_name = ic;
  const double a = setup.mesh.a();
  const double length = setup.mesh.length();
  const int neq = p.num_equations();

  // Scalar profiles shared by advection and the wave system.
  std::function<double(double)> profile;
  if (ic == "box") {
    const std::vector<double> box = cfg.get_doubles("problem.box", {a, a + 0.5 * length});
    if (box.size() != 2 || !(box[1] > box[0]))
      throw ConfigError("problem.box", "expected an interval 'lo, hi' with lo < hi");
    const double height = cfg.get_double("problem.box_height", 1.0);
    const double lo = box[0], hi = box[1];
    profile = [lo, hi, height](double x) { return (x >= lo && x < hi) ? height : 0.0; };
  } else if (ic == "sine") {
    const double m = cfg.get_double("problem.sine_periods", 1.0);
    profile = [a, length, m](double x) {
      return std::sin(2.0 * std::numbers::pi * m * (x - a) / length);
    };
  } else if (ic == "cosine") {
    const double m = cfg.get_double("problem.cos_modes", 1.0);
    profile = [a, length, m](double x) {
      return std::cos(std::numbers::pi * m * (x - a) / length);
    };
  } else if (ic == "wave-neumann") {
    profile = [](double x) {
      return 2.0 + std::cos(5.0 * std::numbers::pi * x) + (std::abs(x) <= 0.3 ? 4.0 : 0.0);
    };
  }

  if (p.kind == ProblemKind::advection) {
    if (ic == "constant") {
      const double c = cfg.get_double("problem.constant", 1.0);
      p.initial = [c](double) { return std::vector<double>{c}; };
      setup.exact = [c](double, double) { return std::vector<double>{c}; };
      return;
    }
    if (!profile || ic == "wave-neumann" || ic == "cosine")
      throw ConfigError("problem.ic", "unsupported initial condition '" + ic + "' for advection");
    p.initial = [profile](double x) { return std::vector<double>{profile(x)}; };
    if (setup.mesh.periodic()) {
      const double v = p.velocity;
      setup.exact = [profile, v, a, length](double x, double t) {
        return std::vector<double>{profile(wrap(x - v * t, a, length))};
      };
    }
    return;
  }

  if (p.kind == ProblemKind::wave) {
    if (ic == "constant") {
      const std::vector<double> c = cfg.get_doubles("problem.constant", {1.0, 0.0});
      if (static_cast<int>(c.size()) != neq)
        throw ConfigError("problem.constant", "expected two values (u, v)");
      p.initial = [c](double) { return c; };
      setup.exact = [c](double, double) { return c; };
      return;
    }
    if (!profile) throw ConfigError("problem.ic", "unsupported initial condition '" + ic + "' for wave");
    p.initial = [profile](double x) { return std::vector<double>{profile(x), 0.0}; };
    const bool neumann = setup.mesh.left_bc() == BoundaryKind::neumann_wave;
    if (setup.mesh.periodic() || neumann) {
      const WaveExact exact(profile, nullptr, p.wave_speed, setup.mesh.a(), setup.mesh.b(),
                            neumann);
      setup.exact = [exact](double x, double t) {
        const auto uv = exact(x, t);
        return std::vector<double>{uv[0], uv[1]};
      };
    }
    return;
  }

  const double gamma = p.gamma;
  if (ic == "constant") {
    const Primitive w = primitive_from(cfg, "problem.state");
    const std::vector<double> c = conserved_vector(w, gamma);
    p.initial = [c](double) { return c; };
    setup.exact = [c](double, double) { return c; };
  } else if (ic == "riemann") {
    const Primitive left = primitive_from(cfg, "problem.left_state");
    const Primitive right = primitive_from(cfg, "problem.right_state");
    const double x0 = cfg.get_double("problem.diaphragm", a + 0.5 * length);
    const std::vector<double> cl = conserved_vector(left, gamma);
    const std::vector<double> cr = conserved_vector(right, gamma);
    p.initial = [cl, cr, x0](double x) { return x < x0 ? cl : cr; };
    if (!setup.mesh.periodic()) {
      const RiemannSolution sol = exact_riemann(left, right, gamma);
      setup.exact = [sol, x0, cl, cr, gamma](double x, double t) {
        if (t <= 0.0) return x < x0 ? cl : cr;
        return conserved_vector(sol.sample((x - x0) / t), gamma);
      };
    }
  } else if (ic == "shu-osher") {
    const Primitive left = primitive_from(cfg, "problem.left_state");
    const Primitive right = primitive_from(cfg, "problem.right_state");
    const double amp = cfg.get_double("problem.density_amplitude", 0.2);
    const double wavenumber = cfg.get_double("problem.density_wavenumber", 5.0);
    const double x0 = cfg.get_double("problem.diaphragm", -4.0);
    const std::vector<double> cl = conserved_vector(left, gamma);
    p.initial = [=](double x) {
      if (x < x0) return cl;
      Primitive w = right;
      w.rho = right.rho + amp * std::sin(wavenumber * x);
      return conserved_vector(w, gamma);
    };
  } else if (ic == "density-wave") {
    const Primitive base = primitive_from(cfg, "problem.state");
    const double amp = cfg.get_double("problem.density_amplitude", 0.2);
    auto state_at = [=](double x) {
      Primitive w = base;
      w.rho = base.rho + amp * std::sin(2.0 * std::numbers::pi * (x - a) / length);
      return conserved_vector(w, gamma);
    };
    p.initial = state_at;
    if (setup.mesh.periodic()) {
      const double u = base.u;
      setup.exact = [=](double x, double t) { return state_at(wrap(x - u * t, a, length)); };
    }
  } else {
    throw ConfigError("problem.ic", "unsupported initial condition '" + ic + "' for euler");
  }
}

void write_csv_double(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "NA";
  } else {
    out << v;
  }
}

std::vector<std::string> component_names(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::advection: return {"u"};
    case ProblemKind::wave: return {"u", "v"};
    case ProblemKind::euler: return {"rho", "rhou", "E"};
  }
  return {};
}

std::string failure_stage_of(const std::exception& e) {
  if (dynamic_cast<const PositivityError*>(&e)) return "rhs";
  if (dynamic_cast<const StagnationError*>(&e)) return "timestep";
  if (dynamic_cast<const std::domain_error*>(&e)) return "viscosity";
  return "solver";
}

json config_json(const Config& cfg) {
  json out = json::object();
  for (const auto& [k, v] : cfg.entries()) out[k] = v;
  return out;
}

}  // namespace

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = {
      "preset",
      "problem.kind", "problem.ic", "problem.velocity", "problem.c", "problem.gamma",
      "problem.T", "problem.box", "problem.box_height", "problem.sine_periods",
      "problem.cos_modes", "problem.constant", "problem.state", "problem.left_state",
      "problem.right_state", "problem.diaphragm", "problem.density_amplitude",
      "problem.density_wavenumber",
      "mesh.K", "mesh.domain", "mesh.bc", "mesh.bc_left", "mesh.bc_right",
      "dg.N",
      "viscosity.enable", "viscosity.c_nu", "viscosity.s_max", "viscosity.baseline",
      "viscosity.skyline", "viscosity.normalize_baseline", "viscosity.noise_floor",
      "time.rtol", "time.atol", "time.cfl", "time.dt_init",
      "output.directory", "output.sample_points", "output.viscosity_every",
      "convergence.N", "convergence.K", "convergence.component", "convergence.norm",
      "convergence.reference_K", "convergence.reference_N",
  };
  return keys;
}

RunSetup make_setup(const Config& raw) {
  RunSetup setup;
  setup.config = resolve_config(raw);
  const Config& cfg = setup.config;
  cfg.check_known(known_config_keys());

  ProblemDefinition& p = setup.problem;
  try {
    p.kind = parse_problem_kind(cfg.get_string("problem.kind"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("problem.kind", e.what());
  }
  p.velocity = cfg.get_double("problem.velocity", 1.0);
  p.wave_speed = cfg.get_double("problem.c", 1.0);
  p.gamma = cfg.get_double("problem.gamma", kDefaultGamma);
  p.final_time = cfg.get_double("problem.T");
  if (!(p.final_time > 0.0)) throw ConfigError("problem.T", "must be positive");
  if (p.kind == ProblemKind::wave && !(p.wave_speed > 0.0))
    throw ConfigError("problem.c", "must be positive");
  if (p.kind == ProblemKind::euler && !(p.gamma > 1.0))
    throw ConfigError("problem.gamma", "must exceed 1");

  setup.degree = cfg.get_int("dg.N");
  if (setup.degree < 1 || setup.degree > ReferenceElement::kMaxDegree)
    throw ConfigError("dg.N", "polynomial degree must lie in [1, " +
                                  std::to_string(ReferenceElement::kMaxDegree) + "]");
  const int K = cfg.get_int("mesh.K");
  if (K < 1) throw ConfigError("mesh.K", "must be at least 1");
  const std::vector<double> domain = cfg.get_doubles("mesh.domain");
  if (domain.size() != 2 || !(domain[1] > domain[0]))
    throw ConfigError("mesh.domain", "expected 'a, b' with a < b");

  BoundaryKind left, right;
  try {
    const std::string both = cfg.get_string("mesh.bc", "periodic");
    left = parse_boundary_kind(cfg.get_string("mesh.bc_left", both));
    right = parse_boundary_kind(cfg.get_string("mesh.bc_right", both));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("mesh.bc", e.what());
  }
  if ((left == BoundaryKind::periodic) != (right == BoundaryKind::periodic))
    throw ConfigError("mesh.bc", "periodic must be set on both ends or neither");
  if (p.kind != ProblemKind::wave &&
      (left == BoundaryKind::neumann_wave || right == BoundaryKind::neumann_wave))
    throw ConfigError("mesh.bc", "neumann-wave requires problem.kind = wave");
  setup.mesh = Mesh1D::uniform(domain[0], domain[1], K, left, right);

  ViscosityConfig& v = setup.viscosity;
  v.enable = cfg.get_bool("viscosity.enable", true);
  v.c_nu = cfg.get_double("viscosity.c_nu", 1.0);
  if (!(v.c_nu > 0.0)) throw ConfigError("viscosity.c_nu", "must be positive");
  v.noise_floor = cfg.get_double("viscosity.noise_floor", v.noise_floor);
  if (!(v.noise_floor >= 0.0)) throw ConfigError("viscosity.noise_floor", "must be >= 0");
  v.detector.s_max = cfg.get_double("viscosity.s_max", 10.0);
  v.detector.baseline = cfg.get_bool("viscosity.baseline", true);
  v.detector.skyline = cfg.get_bool("viscosity.skyline", true);
  v.detector.normalize_baseline = cfg.get_bool("viscosity.normalize_baseline", true);
  if (v.enable && setup.degree < 2)
    throw ConfigError("dg.N", "the smoothness detector needs N >= 2 (or viscosity.enable = false)");

  ControllerOptions& c = setup.controller;
  c.rtol = cfg.get_double("time.rtol", c.rtol);
  c.atol = cfg.get_double("time.atol", c.atol);
  c.dt_init = cfg.get_double("time.dt_init", 0.0);
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("time.rtol", e.what());
  }
  setup.cfl = cfg.get_double("time.cfl", 1.0);
  if (!(setup.cfl > 0.0)) throw ConfigError("time.cfl", "must be positive");

  build_initial(cfg, setup);
  return setup;
}

std::vector<double> domain_integrals(const FieldState& state, const Mesh1D& mesh,
                                     const ReferenceElement& elem) {
  std::vector<double> out(state.num_equations(), 0.0);
  const Eigen::VectorXd& w = elem.lobatto_weights();
  for (int eq = 0; eq < state.num_equations(); ++eq) {
    for (int k = 0; k < mesh.num_elements(); ++k) {
      const auto u = state.element(eq, k);
      double s = 0.0;
      for (int i = 0; i < elem.num_nodes(); ++i) s += w(i) * u[i];
      out[eq] += 0.5 * mesh.h(k) * s;
    }
  }
  return out;
}

RunResult simulate(const RunSetup& setup, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  const DGOperator op(setup.problem, setup.mesh, setup.degree);
  DGSystem system(op, setup.viscosity, setup.cfl);
  result.initial_state = op.initial_state();
  result.final_state = result.initial_state;
  std::vector<double>& y = result.final_state.values();

  long accepted = 0;
  double segment_start = 0.0;
  const StepObserver observer = [&](const StepRecord& rec, std::span<const double> state) {
    StepRecord shifted = rec;
    result.steps.push_back(shifted);
    if (rec.accepted) {
      ++accepted;
      result.nu_peak = std::max(result.nu_peak, rec.nu_max);
      if (options.viscosity_every > 0 && (accepted - 1) % options.viscosity_every == 0)
        result.viscosity_history.push_back({rec.t, system.current_viscosity().raw});
    }
    if (options.observer) options.observer(rec, state);
  };

  std::vector<double> stops = options.snapshot_times;
  std::sort(stops.begin(), stops.end());
  stops.erase(std::remove_if(stops.begin(), stops.end(),
                             [&](double t) { return !(t > 0.0 && t < setup.problem.final_time); }),
              stops.end());
  stops.push_back(setup.problem.final_time);
  const bool want_final_snapshot =
      std::find(options.snapshot_times.begin(), options.snapshot_times.end(),
                setup.problem.final_time) != options.snapshot_times.end();

  ControllerOptions controller = setup.controller;
  try {
    for (std::size_t s = 0; s < stops.size(); ++s) {
      const double t_stop = stops[s];
      const IntegrationStats st = integrate(system, y, segment_start, t_stop, controller, observer);
      result.stats.accepted += st.accepted;
      result.stats.rejected += st.rejected;
      result.stats.rhs_evals += st.rhs_evals;
      result.stats.t_final = st.t_final;
      if (st.dt_next > 0.0) controller.dt_init = st.dt_next;
      segment_start = t_stop;
      result.final_state.set_time(t_stop);
      if (s + 1 < stops.size() || want_final_snapshot) result.snapshots.push_back(result.final_state);
    }
  } catch (const PositivityError& e) {
    result.ok = false;
    result.failure_stage = failure_stage_of(e);
    result.failure_message = e.what();
    result.failure_element = e.element();
  } catch (const StagnationError& e) {
    result.ok = false;
    result.failure_stage = failure_stage_of(e);
    result.failure_message = e.what();
  } catch (const std::domain_error& e) {
    result.ok = false;
    result.failure_stage = failure_stage_of(e);
    result.failure_message = e.what();
  }

  if (result.ok && setup.exact) {
    const double t = setup.problem.final_time;
    for (int eq = 0; eq < op.num_equations(); ++eq) {
      const ExactFn f = [&, eq](double x) { return setup.exact(x, t)[eq]; };
      result.l1_errors.push_back(error_norm(result.final_state, eq, setup.mesh, op.element(), f, 1));
      result.l2_errors.push_back(error_norm(result.final_state, eq, setup.mesh, op.element(), f, 2));
    }
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ConvergenceTable run_convergence(const Config& raw) {
  const Config cfg = resolve_config(raw);
  const RunSetup base = make_setup(cfg);
  ConvergenceTable table;
  table.degrees = cfg.get_ints("convergence.N", {base.degree});
  table.elements = cfg.get_ints("convergence.K");
  const int component = cfg.get_int("convergence.component", 0);
  const int norm = cfg.get_int("convergence.norm", 1);
  if (table.elements.empty()) throw ConfigError("convergence.K", "empty refinement schedule");
  for (std::size_t j = 1; j < table.elements.size(); ++j)
    if (table.elements[j] <= table.elements[j - 1])
      throw ConfigError("convergence.K", "refinement schedule must be strictly increasing");
  if (component < 0 || component >= base.problem.num_equations())
    throw ConfigError("convergence.component", "out of range");
  if (norm != 1 && norm != 2) throw ConfigError("convergence.norm", "must be 1 or 2");

  const double length = base.mesh.length();
  for (int K : table.elements) table.h.push_back(length / K);

  // Self-convergence reference when no exact solution exists.
  std::optional<RunResult> reference;
  std::optional<RunSetup> reference_setup;
  if (!base.exact) {
    Config ref_cfg = cfg;
    ref_cfg.set("mesh.K", std::to_string(cfg.get_int("convergence.reference_K", 2000)));
    ref_cfg.set("dg.N", std::to_string(cfg.get_int("convergence.reference_N", 5)));
    reference_setup = make_setup(ref_cfg);
    reference = simulate(*reference_setup);
    if (!reference->ok)
      throw std::runtime_error("reference run failed: " + reference->failure_message);
    table.reference = "self";
  } else {
    table.reference = "exact";
  }

  for (int N : table.degrees) {
    std::vector<double> row;
    for (int K : table.elements) {
      Config cell = cfg;
      cell.set("dg.N", std::to_string(N));
      cell.set("mesh.K", std::to_string(K));
      double err = std::numeric_limits<double>::quiet_NaN();
      try {
        const RunSetup setup = make_setup(cell);
        const RunResult run = simulate(setup);
        if (!run.ok) {
          table.failures.push_back("N=" + std::to_string(N) + " K=" + std::to_string(K) + ": " +
                                   run.failure_stage + ": " + run.failure_message);
        } else {
          const ReferenceElement elem(N);
          ExactFn f;
          if (reference) {
            const ReferenceElement ref_elem(reference_setup->degree);
            f = [&, ref_elem](double x) {
              return evaluate(reference->final_state, component, reference_setup->mesh, ref_elem, x);
            };
          } else {
            const double T = setup.problem.final_time;
            f = [&setup, component, T](double x) { return setup.exact(x, T)[component]; };
          }
          err = error_norm(run.final_state, component, setup.mesh, elem, f, norm);
        }
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        table.failures.push_back("N=" + std::to_string(N) + " K=" + std::to_string(K) + ": " +
                                 e.what());
      }
      row.push_back(err);
    }
    std::vector<double> hs, es;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (std::isfinite(row[j]) && row[j] > 0.0) {
        hs.push_back(table.h[j]);
        es.push_back(row[j]);
      }
    }
    table.eoc.push_back(hs.size() >= 2 ? std::optional<double>(eoc_fit(hs, es)) : std::nullopt);
    table.errors.push_back(std::move(row));
  }
  return table;
}

void write_convergence_csv(const ConvergenceTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << std::setprecision(6) << std::scientific;
  out << "level,K,h";
  for (int N : table.degrees) out << ",N=" << N;
  out << "\n";
  for (std::size_t j = 0; j < table.elements.size(); ++j) {
    out << "h/" << (table.elements[j] / table.elements.front()) << "," << table.elements[j] << ","
        << table.h[j];
    for (std::size_t i = 0; i < table.degrees.size(); ++i) {
      out << ",";
      write_csv_double(out, table.errors[i][j]);
    }
    out << "\n";
  }
  out << std::fixed << std::setprecision(2);
  out << "EOC,,";
  for (const auto& e : table.eoc) {
    out << ",";
    if (e) {
      out << *e;
    } else {
      out << "NA";
    }
  }
  out << "\n";
}

int cmd_run(const Config& config, const std::string& output_dir) {
  const RunSetup setup = make_setup(config);
  const Config& cfg = setup.config;
  const int samples = cfg.get_int("output.sample_points", 12);
  if (samples < 2) throw ConfigError("output.sample_points", "must be at least 2");
  RunOptions options;
  options.viscosity_every = cfg.get_int("output.viscosity_every", 1);
  if (options.viscosity_every < 0) throw ConfigError("output.viscosity_every", "must be >= 0");

  std::filesystem::create_directories(output_dir);
  const RunResult run = simulate(setup, options);
  const ReferenceElement elem(setup.degree);
  const auto names = component_names(setup.problem.kind);
  const double T = run.final_state.time();

  {
    std::ofstream out(std::filesystem::path(output_dir) / "state.csv");
    out << std::setprecision(12);
    out << "element,x";
    for (const auto& n : names) out << "," << n;
    if (setup.problem.kind == ProblemKind::euler) out << ",u,p";
    if (setup.exact && run.ok)
      for (const auto& n : names) out << ",exact_" << n;
    out << "\n";
    for (int k = 0; k < setup.mesh.num_elements(); ++k) {
      for (int s = 0; s < samples; ++s) {
        const double r = -1.0 + 2.0 * s / (samples - 1);
        const double x = setup.mesh.map_to_physical(k, r);
        out << k << "," << x;
        std::vector<double> vals;
        for (std::size_t eq = 0; eq < names.size(); ++eq) {
          vals.push_back(evaluate_on_element(run.final_state, static_cast<int>(eq), k, elem, r));
          out << "," << vals.back();
        }
        if (setup.problem.kind == ProblemKind::euler) {
          const double u = vals[1] / vals[0];
          const double p = (setup.problem.gamma - 1.0) * (vals[2] - 0.5 * vals[1] * u);
          out << "," << u << "," << p;
        }
        if (setup.exact && run.ok) {
          for (double v : setup.exact(x, T)) out << "," << v;
        }
        out << "\n";
      }
    }
  }
  {
    std::ofstream out(std::filesystem::path(output_dir) / "steps.csv");
    out << std::setprecision(12);
    out << "step,t,dt,err,nu_max,accepted,active_elements,dt_cap\n";
    for (const auto& s : run.steps) {
      out << s.step << "," << s.t << "," << s.dt << "," << s.error << "," << s.nu_max << ","
          << (s.accepted ? 1 : 0) << "," << s.active_elements << "," << s.dt_cap << "\n";
    }
  }
  {
    std::ofstream out(std::filesystem::path(output_dir) / "viscosity.csv");
    out << std::setprecision(10);
    out << "t";
    for (int k = 0; k < setup.mesh.num_elements(); ++k) out << ",nu_" << k;
    out << "\n";
    for (const auto& sample : run.viscosity_history) {
      out << sample.t;
      for (double v : sample.raw) out << "," << v;
      out << "\n";
    }
  }

  json summary;
  summary["status"] = run.ok ? "ok" : "failed";
  if (!run.ok) {
    summary["failure"] = {{"stage", run.failure_stage},
                          {"message", run.failure_message},
                          {"element", run.failure_element}};
  }
  summary["config"] = config_json(cfg);
  summary["problem"] = to_string(setup.problem.kind);
  summary["N"] = setup.degree;
  summary["K"] = setup.mesh.num_elements();
  summary["t_final"] = T;
  summary["steps"] = {{"accepted", run.stats.accepted},
                      {"rejected", run.stats.rejected},
                      {"rhs_evals", run.stats.rhs_evals}};
  summary["nu_max_peak"] = run.nu_peak;
  summary["components"] = names;
  summary["integrals"] = {
      {"initial", domain_integrals(run.initial_state, setup.mesh, elem)},
      {"final", domain_integrals(run.final_state, setup.mesh, elem)}};
  if (!run.l1_errors.empty()) {
    summary["errors"] = {{"L1", run.l1_errors}, {"L2", run.l2_errors}};
    summary["eoc_input"] = {{"h", setup.mesh.length() / setup.mesh.num_elements()},
                            {"L1", run.l1_errors}};
  } else {
    summary["errors"] = nullptr;
  }
  summary["runtime_seconds"] = run.wall_seconds;
  std::ofstream(std::filesystem::path(output_dir) / "summary.json") << summary.dump(2) << "\n";
  return run.ok ? 0 : 3;
}

int cmd_convergence(const Config& config, const std::string& output_dir) {
  std::filesystem::create_directories(output_dir);
  const auto start = std::chrono::steady_clock::now();
  const ConvergenceTable table = run_convergence(config);
  write_convergence_csv(table, (std::filesystem::path(output_dir) / "convergence.csv").string());

  json out;
  out["degrees"] = table.degrees;
  out["K"] = table.elements;
  out["h"] = table.h;
  json errors = json::array();
  for (const auto& row : table.errors) {
    json r = json::array();
    for (double e : row) r.push_back(std::isfinite(e) ? json(e) : json(nullptr));
    errors.push_back(r);
  }
  out["errors"] = errors;
  json eoc = json::array();
  for (const auto& e : table.eoc) eoc.push_back(e ? json(*e) : json(nullptr));
  out["eoc"] = eoc;
  out["reference"] = table.reference;
  out["failures"] = table.failures;
  out["runtime_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ofstream(std::filesystem::path(output_dir) / "convergence.json") << out.dump(2) << "\n";
  return table.failures.empty() ? 0 : 3;
}

std::string cmd_detect(const std::string& function, int degree) {
  return detect_report(function, degree).dump(2);
}

}  // namespace dgshock
