#include "dgshock/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace dgshock {

double riemann_pressure_function(double p, const Primitive& side, double gamma,
                                 double* derivative) {
  const double a = std::sqrt(gamma * side.p / side.rho);
  if (p > side.p) {
    const double A = 2.0 / ((gamma + 1.0) * side.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * side.p;
    const double root = std::sqrt(A / (p + B));
    if (derivative) *derivative = root * (1.0 - 0.5 * (p - side.p) / (p + B));
    return (p - side.p) * root;
  }
  const double ratio = p / side.p;
  const double expo = (gamma - 1.0) / (2.0 * gamma);
  if (derivative) *derivative = std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma)) / (side.rho * a);
  return 2.0 * a / (gamma - 1.0) * (std::pow(ratio, expo) - 1.0);
}

RiemannSolution exact_riemann(const Primitive& left, const Primitive& right, double gamma,
                              double tol) {
  if (!(left.rho > 0.0 && right.rho > 0.0 && left.p > 0.0 && right.p > 0.0))
    throw std::invalid_argument("exact_riemann: densities and pressures must be positive");
  const double aL = std::sqrt(gamma * left.p / left.rho);
  const double aR = std::sqrt(gamma * right.p / right.rho);
  const double du = right.u - left.u;
  if (2.0 / (gamma - 1.0) * (aL + aR) <= du)
    throw VacuumError("exact_riemann: initial data generate vacuum");

  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gamma = gamma;

  const double p_pv =
      0.5 * (left.p + right.p) - 0.125 * du * (left.rho + right.rho) * (aL + aR);
  double p = std::max(p_pv, 1e-8 * std::min(left.p, right.p));
  bool converged = false;
  for (int it = 1; it <= 100; ++it) {
    double dfL, dfR;
    const double f = riemann_pressure_function(p, left, gamma, &dfL) +
                     riemann_pressure_function(p, right, gamma, &dfR) + du;
    double p_new = p - f / (dfL + dfR);
    if (!(p_new > 0.0)) p_new = 0.5 * p;  // keep the iterate admissible
    const double change = std::abs(p_new - p) / (0.5 * (p_new + p));
    p = p_new;
    sol.iterations = it;
    if (change < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw RiemannSolverError("exact_riemann: Newton iteration did not converge");

  sol.p_star = p;
  sol.u_star = 0.5 * (left.u + right.u) +
               0.5 * (riemann_pressure_function(p, right, gamma) -
                      riemann_pressure_function(p, left, gamma));
  const double g = (gamma - 1.0) / (gamma + 1.0);
  auto star_density = [&](const Primitive& s, WaveType& type) {
    const double ratio = p / s.p;
    if (p > s.p) {
      type = WaveType::shock;
      return s.rho * (ratio + g) / (g * ratio + 1.0);
    }
    type = WaveType::rarefaction;
    return s.rho * std::pow(ratio, 1.0 / gamma);
  };
  sol.rho_star_left = star_density(left, sol.left_wave);
  sol.rho_star_right = star_density(right, sol.right_wave);
  return sol;
}

Primitive RiemannSolution::sample(double xi) const {
  const double g1 = (gamma - 1.0) / (2.0 * gamma);
  const double g2 = (gamma + 1.0) / (2.0 * gamma);
  if (xi <= u_star) {
    const double aL = std::sqrt(gamma * left.p / left.rho);
    if (left_wave == WaveType::shock) {
      const double s = left.u - aL * std::sqrt(g2 * p_star / left.p + g1);
      if (xi <= s) return left;
      return {rho_star_left, u_star, p_star};
    }
    const double head = left.u - aL;
    const double a_star = aL * std::pow(p_star / left.p, g1);
    const double tail = u_star - a_star;
    if (xi <= head) return left;
    if (xi >= tail) return {rho_star_left, u_star, p_star};
    const double factor =
        2.0 / (gamma + 1.0) + (gamma - 1.0) / ((gamma + 1.0) * aL) * (left.u - xi);
    const double rho = left.rho * std::pow(factor, 2.0 / (gamma - 1.0));
    const double u = 2.0 / (gamma + 1.0) * (aL + 0.5 * (gamma - 1.0) * left.u + xi);
    const double p = left.p * std::pow(factor, 2.0 * gamma / (gamma - 1.0));
    return {rho, u, p};
  }
  const double aR = std::sqrt(gamma * right.p / right.rho);
  if (right_wave == WaveType::shock) {
    const double s = right.u + aR * std::sqrt(g2 * p_star / right.p + g1);
    if (xi >= s) return right;
    return {rho_star_right, u_star, p_star};
  }
  const double head = right.u + aR;
  const double a_star = aR * std::pow(p_star / right.p, g1);
  const double tail = u_star + a_star;
  if (xi >= head) return right;
  if (xi <= tail) return {rho_star_right, u_star, p_star};
  const double factor =
      2.0 / (gamma + 1.0) - (gamma - 1.0) / ((gamma + 1.0) * aR) * (right.u - xi);
  const double rho = right.rho * std::pow(factor, 2.0 / (gamma - 1.0));
  const double u = 2.0 / (gamma + 1.0) * (-aR + 0.5 * (gamma - 1.0) * right.u + xi);
  const double p = right.p * std::pow(factor, 2.0 * gamma / (gamma - 1.0));
  return {rho, u, p};
}

}  // namespace dgshock
