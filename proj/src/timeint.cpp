#include "dgshock/timeint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dgshock {

namespace {

constexpr double kA21 = 1.0 / 2.0;
constexpr double kA32 = 3.0 / 4.0;
constexpr double kB1 = 2.0 / 9.0;
constexpr double kB2 = 1.0 / 3.0;
constexpr double kB3 = 4.0 / 9.0;
// Second-order weights (FSAL stage included).
constexpr double kE1 = 7.0 / 24.0;
constexpr double kE2 = 1.0 / 4.0;
constexpr double kE3 = 1.0 / 3.0;
constexpr double kE4 = 1.0 / 8.0;

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

double dt_cap(double lambda_max, double nu_max, double h_min, int degree, double cfl) {
  const double n2 = static_cast<double>(degree) * degree;
  const double rate = lambda_max * n2 / h_min + nu_max * n2 * n2 / (h_min * h_min);
  if (rate == 0.0) return std::numeric_limits<double>::infinity();
  return cfl / rate;
}

void ControllerOptions::validate() const {
  if (!(rtol >= 0.0) || !(atol >= 0.0) || (rtol == 0.0 && atol == 0.0))
    throw std::invalid_argument("time.rtol/time.atol must be non-negative and not both zero");
  if (!(safety > 0.0 && safety < 1.0)) throw std::invalid_argument("safety must lie in (0,1)");
  if (!(fac_min > 0.0 && fac_min < 1.0 && fac_max > 1.0))
    throw std::invalid_argument("step factors must satisfy 0 < fac_min < 1 < fac_max");
}

double weighted_rms(std::span<const double> diff, std::span<const double> y0,
                    std::span<const double> y1, double rtol, double atol) {
  if (diff.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double e = diff[i] / scale;
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(diff.size()));
}

Bs3Step step_bs3(OdeSystem& system, double t, std::span<const double> y,
                 std::span<const double> k1, double dt, double rtol, double atol) {
  const std::size_t n = y.size();
  Bs3Step out;
  std::vector<double> stage(n), k2(n), k3(n);
  out.k_last.resize(n);
  out.y.resize(n);

  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + dt * kA21 * k1[i];
  system.rhs(t + 0.5 * dt, stage, k2);
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + dt * kA32 * k2[i];
  system.rhs(t + 0.75 * dt, stage, k3);
  for (std::size_t i = 0; i < n; ++i)
    out.y[i] = y[i] + dt * (kB1 * k1[i] + kB2 * k2[i] + kB3 * k3[i]);
  if (!all_finite(out.y)) {
    out.finite = false;
    return out;
  }
  system.rhs(t + dt, out.y, out.k_last);

  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = dt * ((kB1 - kE1) * k1[i] + (kB2 - kE2) * k2[i] + (kB3 - kE3) * k3[i] -
                    kE4 * out.k_last[i]);
  }
  out.error = weighted_rms(diff, y, out.y, rtol, atol);
  out.finite = std::isfinite(out.error) && all_finite(out.k_last);
  return out;
}

IntegrationStats integrate(OdeSystem& system, std::vector<double>& y, double t0, double t_end,
                           const ControllerOptions& options, const StepObserver& observer) {
  options.validate();
  IntegrationStats stats;
  stats.t_final = t0;
  if (!(t_end > t0)) return stats;

  const std::size_t n = y.size();
  const double span = t_end - t0;
  const double dt_min = options.stagnation_ratio * span;
  double t = t0;
  std::vector<double> k1(n);

  StepContext ctx = system.begin_step(t, y);
  system.rhs(t, y, k1);
  ++stats.rhs_evals;

  double dt = options.dt_init;
  if (dt <= 0.0) {
    // Hairer-Wanner style first guess from the size of y and y'.
    std::vector<double> zero(n, 0.0);
    const double d0 = weighted_rms(y, y, zero, options.rtol, options.atol);
    const double d1 = weighted_rms(k1, y, zero, options.rtol, options.atol);
    dt = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 * span : 0.01 * d0 / d1;
  }

  long step = 0;
  while (t < t_end) {
    if (step >= options.max_steps)
      throw StagnationError("step limit of " + std::to_string(options.max_steps) + " reached");
    dt = std::min(dt, ctx.dt_cap);
    const bool last = dt >= t_end - t;
    if (last) dt = t_end - t;
    if (dt < dt_min && !last) {
      throw StagnationError("time step " + std::to_string(dt) + " underflow at t = " +
                            std::to_string(t));
    }

    Bs3Step result = step_bs3(system, t, y, k1, dt, options.rtol, options.atol);
    stats.rhs_evals += result.finite ? 3 : 2;

    StepRecord rec;
    rec.step = step++;
    rec.t = t;
    rec.dt = dt;
    rec.error = result.error;
    rec.nu_max = ctx.nu_max;
    rec.active_elements = ctx.active_elements;
    rec.dt_cap = ctx.dt_cap;

    if (!result.finite) {
      rec.error = std::numeric_limits<double>::infinity();
      ++stats.rejected;
      if (observer) observer(rec, y);
      dt *= 0.5;
      continue;
    }

    const double err = std::max(result.error, options.err_floor);
    if (result.error <= 1.0) {
      rec.accepted = true;
      ++stats.accepted;
      t = last ? t_end : t + dt;
      y.swap(result.y);
      if (observer) observer(rec, y);
      const double fac = std::min(options.fac_max,
                                  std::max(options.fac_min, options.safety * std::cbrt(1.0 / err)));
      dt *= fac;
      stats.dt_next = dt;
      if (t >= t_end) break;
      ctx = system.begin_step(t, y);
      if (ctx.changed) {
        system.rhs(t, y, k1);
        ++stats.rhs_evals;
      } else {
        k1.swap(result.k_last);
      }
    } else {
      ++stats.rejected;
      if (observer) observer(rec, y);
      dt *= std::max(options.fac_min, options.safety * std::cbrt(1.0 / err));
    }
  }
  stats.t_final = t;
  return stats;
}

}  // namespace dgshock
