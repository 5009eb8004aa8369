#include "dgshock/euler.hpp"

#include <cmath>

namespace dgshock {

Primitive euler_primitive(const EulerState& conserved, double gamma, int element) {
  const double rho = conserved[0];
  if (!(rho > 0.0)) {
    throw PositivityError("non-positive density " + std::to_string(rho) + " in element " +
                              std::to_string(element),
                          element);
  }
  const double u = conserved[1] / rho;
  const double p = (gamma - 1.0) * (conserved[2] - 0.5 * rho * u * u);
  if (!(p > 0.0)) {
    throw PositivityError("non-positive pressure " + std::to_string(p) + " in element " +
                              std::to_string(element),
                          element);
  }
  return {rho, u, p};
}

EulerState euler_conserved(const Primitive& w, double gamma) {
  return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

double sound_speed(const Primitive& w, double gamma) { return std::sqrt(gamma * w.p / w.rho); }

EulerState euler_flux(const EulerState& conserved, double gamma, int element) {
  const Primitive w = euler_primitive(conserved, gamma, element);
  return {conserved[1], conserved[1] * w.u + w.p, w.u * (conserved[2] + w.p)};
}

double euler_max_speed(const EulerState& conserved, double gamma, int element) {
  const Primitive w = euler_primitive(conserved, gamma, element);
  return std::abs(w.u) + sound_speed(w, gamma);
}

}  // namespace dgshock
