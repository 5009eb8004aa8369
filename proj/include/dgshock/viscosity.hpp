#pragma once

#include <span>
#include <vector>

#include "dgshock/detector.hpp"
#include "dgshock/mesh.hpp"

namespace dgshock {

/// Continuous piecewise-linear artificial viscosity.
struct ViscosityField {
  std::vector<double> raw;     // per-element value before smoothing
  std::vector<double> vertex;  // K+1 vertex values of the P1 field

  int num_elements() const { return static_cast<int>(raw.size()); }
  double left(int k) const { return vertex[k]; }
  double right(int k) const { return vertex[k + 1]; }
  /// nu on element k at reference coordinate r.
  double at(int k, double r) const {
    return 0.5 * (1.0 - r) * vertex[k] + 0.5 * (1.0 + r) * vertex[k + 1];
  }
  double max() const;
  bool all_zero() const;

  static ViscosityField zero(int num_elements);
};

/// Fraction-of-nu0 ramp: 1 for s < 1, 0 for s > 3, and
/// 1 - (1 + sin(pi (s - 2) / 2)) / 2 in between, scaled by nu0.
double activation(double s, double nu0);

/// c_nu * lambda_max * h / N.
double nu0_scale(double lambda_max, double h, int degree, double c_nu);

/// Vertex-max smoothing: each vertex takes the largest raw value of its
/// adjacent elements, each element interpolates its two vertex values.
ViscosityField smooth_p1(std::span<const double> raw, const Mesh1D& mesh);

struct ViscosityConfig {
  bool enable = true;
  double c_nu = 1.0;
  /// Baseline norm floor relative to the L2 norm of max|q| over an element:
  /// content below this level counts as noise rather than as non-smoothness.
  double noise_floor = 1e-2;
  DetectorOptions detector;
};

/// Runs the detector on component `detector_component` of every element,
/// maps each exponent through the activation ramp with nu0 scaled by the
/// global lambda_max, then smooths. Throws std::domain_error on non-finite
/// state values.
ViscosityField compute_viscosity(const FieldState& state, int detector_component,
                                 double lambda_max, const Mesh1D& mesh,
                                 const ReferenceElement& elem, const ViscosityConfig& config);

}  // namespace dgshock
