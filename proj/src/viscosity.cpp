#include "dgshock/viscosity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dgshock {

double ViscosityField::max() const {
  double m = 0.0;
  for (double v : vertex) m = std::max(m, v);
  return m;
}

bool ViscosityField::all_zero() const {
  return std::all_of(vertex.begin(), vertex.end(), [](double v) { return v == 0.0; });
}

ViscosityField ViscosityField::zero(int num_elements) {
  ViscosityField f;
  f.raw.assign(num_elements, 0.0);
  f.vertex.assign(num_elements + 1, 0.0);
  return f;
}

double activation(double s, double nu0) {
  if (s < 1.0) return nu0;
  if (s > 3.0) return 0.0;
  const double ramp = 1.0 - 0.5 * (1.0 + std::sin(std::numbers::pi * (s - 2.0) / 2.0));
  return nu0 * ramp;
}

double nu0_scale(double lambda_max, double h, int degree, double c_nu) {
  return c_nu * lambda_max * h / degree;
}

ViscosityField smooth_p1(std::span<const double> raw, const Mesh1D& mesh) {
  const int num_elem = mesh.num_elements();
  if (static_cast<int>(raw.size()) != num_elem)
    throw std::invalid_argument("smooth_p1: one raw value per element required");
  ViscosityField field;
  field.raw.assign(raw.begin(), raw.end());
  field.vertex.assign(num_elem + 1, 0.0);
  for (int j = 1; j < num_elem; ++j) field.vertex[j] = std::max(raw[j - 1], raw[j]);
  if (mesh.periodic()) {
    const double wrap = std::max(raw.front(), raw.back());
    field.vertex.front() = wrap;
    field.vertex.back() = wrap;
  } else {
    field.vertex.front() = raw.front();
    field.vertex.back() = raw.back();
  }
  return field;
}

ViscosityField compute_viscosity(const FieldState& state, int detector_component,
                                 double lambda_max, const Mesh1D& mesh,
                                 const ReferenceElement& elem, const ViscosityConfig& config) {
  const int num_elem = mesh.num_elements();
  if (!config.enable) return ViscosityField::zero(num_elem);
  if (!state.all_finite()) throw std::domain_error("compute_viscosity: non-finite state");

  double scale = 0.0;
  for (double v : state.component(detector_component)) scale = std::max(scale, std::abs(v));

  std::vector<double> raw(num_elem, 0.0);
  DetectorOptions options = config.detector;
  for (int k = 0; k < num_elem; ++k) {
    const double h = mesh.h(k);
    options.norm_floor = config.noise_floor * scale * std::sqrt(h);
    const SmoothnessReport report =
        estimate_smoothness(elem, state.element(detector_component, k), h, options);
    raw[k] = activation(report.exponent, nu0_scale(lambda_max, h, elem.degree(), config.c_nu));
  }
  return smooth_p1(raw, mesh);
}

}  // namespace dgshock
