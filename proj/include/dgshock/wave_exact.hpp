#pragma once

#include <array>
#include <functional>

namespace dgshock {

/// d'Alembert solution of u_t + c v_x = 0, v_t + c u_x = 0 on (a, b).
///
/// With Neumann boundaries u is extended evenly and v oddly across both ends,
/// giving period 2(b - a); otherwise the data are extended periodically with
/// period b - a.
class WaveExact {
 public:
  using Profile = std::function<double(double)>;

  WaveExact(Profile u0, Profile v0, double c, double a, double b, bool neumann);

  /// (u, v) at (x, t).
  std::array<double, 2> operator()(double x, double t) const;

  double u(double x, double t) const { return (*this)(x, t)[0]; }
  double v(double x, double t) const { return (*this)(x, t)[1]; }

 private:
  /// Extended initial data (u0, v0) at any real x.
  std::array<double, 2> extended(double x) const;

  Profile u0_;
  Profile v0_;
  double c_;
  double a_;
  double b_;
  bool neumann_;
};

}  // namespace dgshock
