#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace dgshock {

using EulerState = std::array<double, 3>;  // (rho, rho u, E)

struct Primitive {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

/// Raised when density or pressure leaves the admissible set.
class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, int element)
      : std::runtime_error(what), element_(element) {}
  int element() const { return element_; }

 private:
  int element_;
};

constexpr double kDefaultGamma = 1.4;

/// Throws PositivityError if rho <= 0 or p <= 0.
Primitive euler_primitive(const EulerState& conserved, double gamma, int element = -1);
EulerState euler_conserved(const Primitive& w, double gamma);
double sound_speed(const Primitive& w, double gamma);
/// Physical flux (rho u, rho u^2 + p, u (E + p)).
EulerState euler_flux(const EulerState& conserved, double gamma, int element = -1);
/// |u| + a.
double euler_max_speed(const EulerState& conserved, double gamma, int element = -1);

}  // namespace dgshock
