#pragma once

#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace dgshock {

/// Frozen per-step data reported by a system at the start of each step.
struct StepContext {
  double dt_cap = std::numeric_limits<double>::infinity();
  double nu_max = 0.0;
  int active_elements = 0;
  /// False when the right-hand side is identical to the one used in the
  /// previous step, which lets the integrator reuse the FSAL stage.
  bool changed = true;
};

/// Autonomous-in-structure ODE y' = f(t, y) with an optional step hook.
class OdeSystem {
 public:
  virtual ~OdeSystem() = default;
  /// Called once before every step attempt sequence from a new state. The
  /// default reports an uncapped, unchanged right-hand side.
  virtual StepContext begin_step(double /*t*/, std::span<const double> /*y*/) {
    StepContext ctx;
    ctx.changed = false;
    return ctx;
  }
  virtual void rhs(double t, std::span<const double> y, std::span<double> dydt) = 0;
};

/// Wraps a callable as an OdeSystem with no step cap.
class FunctionSystem : public OdeSystem {
 public:
  using Fn = std::function<void(double, std::span<const double>, std::span<double>)>;
  explicit FunctionSystem(Fn fn) : fn_(std::move(fn)) {}
  void rhs(double t, std::span<const double> y, std::span<double> dydt) override {
    fn_(t, y, dydt);
  }

 private:
  Fn fn_;
};

class StagnationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C / (lambda N^2 / h_min + nu N^4 / h_min^2); +inf when both rates vanish.
double dt_cap(double lambda_max, double nu_max, double h_min, int degree, double cfl);

struct ControllerOptions {
  double rtol = 1e-4;
  double atol = 1e-8;
  double safety = 0.9;
  double fac_min = 0.2;
  double fac_max = 5.0;
  double err_floor = 1e-12;
  double dt_init = 0.0;  // <= 0 selects an automatic first step
  double stagnation_ratio = 1e-14;
  long max_steps = 50'000'000;

  void validate() const;
};

/// Weighted RMS of (a - b) / (atol + rtol max(|y0|, |y1|)).
double weighted_rms(std::span<const double> diff, std::span<const double> y0,
                    std::span<const double> y1, double rtol, double atol);

struct Bs3Step {
  std::vector<double> y;       // third-order solution
  std::vector<double> k_last;  // f(t + dt, y), reusable as the next first stage
  double error = 0.0;
  bool finite = true;
};

/// One Bogacki-Shampine 3(2) step from (t, y) with first stage k1 = f(t, y).
Bs3Step step_bs3(OdeSystem& system, double t, std::span<const double> y,
                 std::span<const double> k1, double dt, double rtol, double atol);

struct StepRecord {
  long step = 0;
  double t = 0.0;  // time at the start of the attempt
  double dt = 0.0;
  double error = 0.0;
  double nu_max = 0.0;
  int active_elements = 0;
  double dt_cap = 0.0;
  bool accepted = false;
};

struct IntegrationStats {
  double t_final = 0.0;
  long accepted = 0;
  long rejected = 0;
  long rhs_evals = 0;
  double dt_next = 0.0;  // controller proposal after the last accepted step
};

/// Receives each attempt record; for accepted steps y is the new state at
/// record.t + record.dt.
using StepObserver = std::function<void(const StepRecord&, std::span<const double> y)>;

/// Adaptive integration of y from t0 to t_end, in place. Every attempted step
/// is reported to `observer`. Throws StagnationError when dt falls below
/// stagnation_ratio * (t_end - t0).
IntegrationStats integrate(OdeSystem& system, std::vector<double>& y, double t0, double t_end,
                           const ControllerOptions& options, const StepObserver& observer = {});

}  // namespace dgshock
