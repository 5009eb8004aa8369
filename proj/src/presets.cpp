#include "dgshock/presets.hpp"

#include <utility>

namespace dgshock {

namespace {

// Shared defaults for the Euler benchmarks.
constexpr const char* kEulerCommon = R"(
problem.kind = euler
problem.gamma = 1.4
mesh.bc = dirichlet-farfield
viscosity.c_nu = 0.5
)";

const std::vector<std::pair<std::string, std::string>>& registry() {
  static const std::vector<std::pair<std::string, std::string>> presets = {
      {"advection-box", R"(
problem.kind = advection
problem.ic = box
problem.box = 0, 5
problem.velocity = 1
problem.T = 2
mesh.domain = 0, 10
mesh.K = 20
mesh.bc = periodic
dg.N = 10
viscosity.c_nu = 1
)"},
      {"smooth-sine", R"(
problem.kind = advection
problem.ic = sine
problem.sine_periods = 1
problem.velocity = 1
problem.T = 1
mesh.domain = 0, 1
mesh.K = 8
mesh.bc = periodic
dg.N = 8
time.rtol = 1e-13
time.atol = 1e-15
convergence.N = 8
convergence.K = 2, 4, 8
)"},
      {"wave-neumann", R"(
problem.kind = wave
problem.ic = wave-neumann
problem.c = 1
problem.T = 0.6
mesh.domain = -1, 1
mesh.K = 40
mesh.bc = neumann-wave
dg.N = 3
viscosity.c_nu = 1
convergence.N = 3
convergence.K = 40, 80, 160
convergence.norm = 1
)"},
      {"sod", std::string(kEulerCommon) + R"(
problem.ic = riemann
problem.left_state = 1, 0, 1
problem.right_state = 0.125, 0, 0.1
problem.diaphragm = 0.5
problem.T = 0.25
mesh.domain = 0, 1
mesh.K = 40
dg.N = 4
convergence.N = 4, 5
convergence.K = 20, 40, 80
convergence.component = 0
convergence.norm = 1
)"},
      {"sod-n5-k80", std::string(kEulerCommon) + R"(
problem.ic = riemann
problem.left_state = 1, 0, 1
problem.right_state = 0.125, 0, 0.1
problem.diaphragm = 0.5
problem.T = 0.25
mesh.domain = 0, 1
mesh.K = 80
dg.N = 5
)"},
      {"sod-table", std::string(kEulerCommon) + R"(
problem.ic = riemann
problem.left_state = 1, 0, 1
problem.right_state = 0.125, 0, 0.1
problem.diaphragm = 0.5
problem.T = 0.25
mesh.domain = 0, 1
mesh.K = 20
dg.N = 4
convergence.N = 3, 4, 5, 6, 7, 8, 9
convergence.K = 20, 40, 80, 160, 320, 640
convergence.component = 0
convergence.norm = 1
)"},
      {"lax", std::string(kEulerCommon) + R"(
problem.ic = riemann
problem.left_state = 0.445, 0.698, 3.528
problem.right_state = 0.5, 0, 0.571
problem.diaphragm = 0.5
problem.T = 0.13
mesh.domain = 0, 1
mesh.K = 80
dg.N = 5
convergence.N = 5
convergence.K = 20, 40, 80
convergence.component = 0
convergence.norm = 1
)"},
      {"shu-osher", std::string(kEulerCommon) + R"(
problem.ic = shu-osher
problem.left_state = 3.857143, 2.629369, 10.33333
problem.right_state = 1, 0, 1
problem.density_amplitude = 0.2
problem.density_wavenumber = 5
problem.diaphragm = -4
problem.T = 1.8
mesh.domain = -5, 5
mesh.K = 80
dg.N = 5
viscosity.c_nu = 1
convergence.N = 5
convergence.K = 80, 160, 320
convergence.component = 0
convergence.norm = 1
convergence.reference_K = 2000
convergence.reference_N = 5
)"},
  };
  return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : registry()) names.push_back(name);
  return names;
}

Config preset_config(const std::string& name) {
  for (const auto& [preset, text] : registry()) {
    if (preset == name) return Config::parse(text, "preset " + name);
  }
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("preset", "unknown preset '" + name + "' (known: " + known + ")");
}

Config resolve_config(const Config& user) {
  Config out;
  if (user.has("preset")) out = preset_config(user.get_string("preset"));
  out.merge(user);
  return out;
}

}  // namespace dgshock
