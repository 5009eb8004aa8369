#pragma once

#include <array>
#include <cstddef>

#include "dgshock/euler.hpp"

namespace dgshock {

/// Upwind flux for u_t + v u_x = 0 on a face with outward normal n:
/// v n uL if v n >= 0, else v n uR.
double upwind_flux_advection(double uL, double uR, double v, double n);

/// Rusanov flux in the +x direction for a face with uL on the left and uR on
/// the right:  (F(uL) + F(uR))/2 - lambda/2 (uR - uL).
template <class State, class FluxFn>
State llf_flux(const State& uL, const State& uR, FluxFn&& flux, double lambda) {
  const State fL = flux(uL);
  const State fR = flux(uR);
  State out{};
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = 0.5 * (fL[i] + fR[i]) - 0.5 * lambda * (uR[i] - uL[i]);
  return out;
}

/// Euler Rusanov flux with lambda = max(|u| + a) over both states.
EulerState euler_llf_flux(const EulerState& uL, const EulerState& uR, double gamma,
                          int element = -1);

/// Characteristic upwind flux in the +x direction for
///   u_t + c v_x = 0,  v_t + c u_x = 0.
/// Returns (c v*, c u*) with u + v taken from the left and u - v from the right.
std::array<double, 2> wave_upwind_flux(double uL, double vL, double uR, double vR, double c);

}  // namespace dgshock
