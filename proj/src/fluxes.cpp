#include "dgshock/fluxes.hpp"

#include <algorithm>

namespace dgshock {

double upwind_flux_advection(double uL, double uR, double v, double n) {
  const double vn = v * n;
  return vn >= 0.0 ? vn * uL : vn * uR;
}

EulerState euler_llf_flux(const EulerState& uL, const EulerState& uR, double gamma,
                          int element) {
  const double lambda =
      std::max(euler_max_speed(uL, gamma, element), euler_max_speed(uR, gamma, element));
  return llf_flux(
      uL, uR, [&](const EulerState& u) { return euler_flux(u, gamma, element); }, lambda);
}

std::array<double, 2> wave_upwind_flux(double uL, double vL, double uR, double vR, double c) {
  const double w_plus = uL + vL;
  const double w_minus = uR - vR;
  const double u_star = 0.5 * (w_plus + w_minus);
  const double v_star = 0.5 * (w_plus - w_minus);
  return {c * v_star, c * u_star};
}

}  // namespace dgshock
