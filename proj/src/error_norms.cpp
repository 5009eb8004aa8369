#include "dgshock/error_norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dgshock/detector.hpp"

namespace dgshock {

double error_norm(const FieldState& state, int component, const Mesh1D& mesh,
                  const ReferenceElement& elem, const ExactFn& exact, int p) {
  if (p != 1 && p != 2) throw std::invalid_argument("error_norm: p must be 1 or 2");
  const QuadratureRule rule = gauss_legendre(2 * elem.degree() + 2);
  const Eigen::MatrixXd interp = elem.interpolation_matrix(rule.points);
  const int np = elem.num_nodes();
  double total = 0.0;
  for (int k = 0; k < mesh.num_elements(); ++k) {
    const auto nodal = state.element(component, k);
    const Eigen::VectorXd uq =
        interp * Eigen::Map<const Eigen::VectorXd>(nodal.data(), np);
    double local = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double diff = std::abs(uq(q) - exact(mesh.map_to_physical(k, rule.points[q])));
      local += rule.weights[q] * (p == 1 ? diff : diff * diff);
    }
    total += 0.5 * mesh.h(k) * local;
  }
  return p == 1 ? total : std::sqrt(total);
}

double eoc_fit(std::span<const double> h, std::span<const double> errors) {
  if (h.size() != errors.size()) throw std::invalid_argument("eoc_fit: size mismatch");
  if (h.size() < 2) throw UnderdeterminedFitError("eoc_fit: need at least two points");
  const double n = static_cast<double>(h.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0) || !(errors[i] > 0.0))
      throw std::invalid_argument("eoc_fit: h and errors must be positive");
    const double x = std::log(h[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  if (std::abs(det) <= 1e-14 * std::max(1.0, n * sxx))
    throw UnderdeterminedFitError("eoc_fit: mesh sizes coincide");
  return (n * sxy - sx * sy) / det;
}

PointwiseEoc pointwise_eoc_map(std::span<const double> h,
                               const std::vector<std::vector<double>>& errors) {
  if (errors.size() != h.size() || h.size() < 2)
    throw std::invalid_argument("pointwise_eoc_map: one error array per level required");
  const std::size_t samples = errors.front().size();
  for (const auto& level : errors)
    if (level.size() != samples) throw std::invalid_argument("pointwise_eoc_map: ragged input");

  PointwiseEoc out;
  out.eoc.assign(samples, std::numeric_limits<double>::quiet_NaN());
  out.saturated.assign(samples, false);
  std::vector<double> column(h.size());
  for (std::size_t s = 0; s < samples; ++s) {
    bool zero = false;
    for (std::size_t l = 0; l < h.size(); ++l) {
      column[l] = std::abs(errors[l][s]);
      if (column[l] == 0.0) zero = true;
    }
    if (zero) {
      out.saturated[s] = true;
      continue;
    }
    out.eoc[s] = eoc_fit(h, column);
  }
  return out;
}

}  // namespace dgshock
