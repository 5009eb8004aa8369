#pragma once

#include <stdexcept>

#include "dgshock/euler.hpp"

namespace dgshock {

class VacuumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RiemannSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WaveType { shock, rarefaction };

/// Exact solution of the 1D Euler Riemann problem for an ideal gas.
struct RiemannSolution {
  Primitive left;
  Primitive right;
  double gamma = kDefaultGamma;
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  WaveType left_wave = WaveType::rarefaction;
  WaveType right_wave = WaveType::rarefaction;
  int iterations = 0;

  /// Primitive state at xi = (x - x0) / t.
  Primitive sample(double xi) const;
};

/// Pressure function f_K(p) of one side and its derivative.
double riemann_pressure_function(double p, const Primitive& side, double gamma,
                                 double* derivative = nullptr);

/// Safeguarded Newton iteration for p*, stopping when |dp| / p < tol.
/// Throws VacuumError for data that generate vacuum and RiemannSolverError
/// after 100 iterations without convergence.
RiemannSolution exact_riemann(const Primitive& left, const Primitive& right,
                              double gamma = kDefaultGamma, double tol = 1e-14);

}  // namespace dgshock
