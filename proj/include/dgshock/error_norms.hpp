#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dgshock/mesh.hpp"
#include "dgshock/reference_element.hpp"

namespace dgshock {

using ExactFn = std::function<double(double x)>;

/// (sum_k int_{D_k} |u_N - u_exact|^p dx)^{1/p} for p in {1, 2}, using a
/// 2N+2 point Gauss rule per element with pointwise exact values.
double error_norm(const FieldState& state, int component, const Mesh1D& mesh,
                  const ReferenceElement& elem, const ExactFn& exact, int p);

/// Least-squares slope of log e against log h. Throws UnderdeterminedFitError
/// when all h coincide and std::invalid_argument for non-positive inputs.
double eoc_fit(std::span<const double> h, std::span<const double> errors);

/// Pointwise EOC from errors[level][sample] on a common sample grid.
struct PointwiseEoc {
  std::vector<double> eoc;       // NaN where saturated
  std::vector<bool> saturated;   // some level had zero error
};

PointwiseEoc pointwise_eoc_map(std::span<const double> h,
                               const std::vector<std::vector<double>>& errors);

}  // namespace dgshock
