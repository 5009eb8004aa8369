#include "dgshock/wave_exact.hpp"

#include <cmath>
#include <stdexcept>

namespace dgshock {

WaveExact::WaveExact(Profile u0, Profile v0, double c, double a, double b, bool neumann)
    : u0_(std::move(u0)), v0_(std::move(v0)), c_(c), a_(a), b_(b), neumann_(neumann) {
  if (!(b > a)) throw std::invalid_argument("WaveExact: need a < b");
  if (!u0_) u0_ = [](double) { return 0.0; };
  if (!v0_) v0_ = [](double) { return 0.0; };
}

std::array<double, 2> WaveExact::extended(double x) const {
  const double length = b_ - a_;
  const double period = neumann_ ? 2.0 * length : length;
  double y = std::fmod(x - a_, period);
  if (y < 0.0) y += period;
  if (!neumann_ || y <= length) return {u0_(a_ + y), v0_(a_ + y)};
  const double mirrored = b_ - (y - length);
  return {u0_(mirrored), -v0_(mirrored)};
}

std::array<double, 2> WaveExact::operator()(double x, double t) const {
  const auto right_moving = extended(x - c_ * t);
  const auto left_moving = extended(x + c_ * t);
  const double w_plus = right_moving[0] + right_moving[1];
  const double w_minus = left_moving[0] - left_moving[1];
  return {0.5 * (w_plus + w_minus), 0.5 * (w_plus - w_minus)};
}

}  // namespace dgshock
