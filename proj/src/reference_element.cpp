#include "dgshock/reference_element.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dgshock {

namespace {

// Unnormalized Legendre P_n(r) and P_n'(r) by the three-term recurrence.
void legendre_pair(int n, double r, double& p, double& dp) {
  double p_prev = 1.0, dp_prev = 0.0;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  double p_cur = r, dp_cur = 1.0;
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2 * k + 1) * r * p_cur - k * p_prev) / (k + 1);
    const double dp_next = dp_prev + (2 * k + 1) * p_cur;
    p_prev = p_cur;
    dp_prev = dp_cur;
    p_cur = p_next;
    dp_cur = dp_next;
  }
  p = p_cur;
  dp = dp_cur;
}

double orthonormal_factor(int n) { return std::sqrt((2.0 * n + 1.0) / 2.0); }

}  // namespace

double legendre_eval(int n, double r) {
  double p, dp;
  legendre_pair(n, r, p, dp);
  return orthonormal_factor(n) * p;
}

double legendre_deriv(int n, double r) {
  double p, dp;
  legendre_pair(n, r, p, dp);
  return orthonormal_factor(n) * dp;
}

QuadratureRule gauss_legendre(int npoints) {
  if (npoints < 1) throw std::invalid_argument("gauss_legendre: npoints must be >= 1");
  QuadratureRule rule;
  rule.points.resize(npoints);
  rule.weights.resize(npoints);
  for (int i = 0; i < npoints; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (npoints + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(npoints, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre_pair(npoints, x, p, dp);
    rule.points[npoints - 1 - i] = x;
    rule.weights[npoints - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

QuadratureRule gauss_lobatto(int degree) {
  if (degree < 1) throw std::invalid_argument("gauss_lobatto: degree must be >= 1");
  const int n = degree;
  QuadratureRule rule;
  rule.points.resize(n + 1);
  rule.weights.resize(n + 1);
  // Newton on (1 - x^2) P_n'(x) using the Chebyshev-Gauss-Lobatto points as a
  // starting guess.
  for (int i = 0; i <= n; ++i) {
    double x = -std::cos(std::numbers::pi * i / n);
    for (int it = 0; it < 100; ++it) {
      double p_nm1, dummy, p_n;
      legendre_pair(n - 1, x, p_nm1, dummy);
      legendre_pair(n, x, p_n, dummy);
      const double dx = (x * p_n - p_nm1) / ((n + 1) * p_n);
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p_n, dp;
    legendre_pair(n, x, p_n, dp);
    rule.points[i] = x;
    rule.weights[i] = 2.0 / (n * (n + 1) * p_n * p_n);
  }
  rule.points.front() = -1.0;
  rule.points.back() = 1.0;
  return rule;
}

ReferenceElement::ReferenceElement(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("polynomial degree must lie in [1, " +
                                std::to_string(kMaxDegree) + "], got " +
                                std::to_string(degree));
  }
  const int np = degree + 1;
  const QuadratureRule gll = gauss_lobatto(degree);
  nodes_ = Eigen::Map<const Eigen::VectorXd>(gll.points.data(), np);
  lobatto_weights_ = Eigen::Map<const Eigen::VectorXd>(gll.weights.data(), np);

  vandermonde_.resize(np, np);
  Eigen::MatrixXd vr(np, np);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      vandermonde_(i, j) = legendre_eval(j, nodes_(i));
      vr(i, j) = legendre_deriv(j, nodes_(i));
    }
  }
  inv_vandermonde_ = vandermonde_.partialPivLu().inverse();
  inv_mass_ = vandermonde_ * vandermonde_.transpose();
  mass_ = inv_vandermonde_.transpose() * inv_vandermonde_;
  diff_ = vr * inv_vandermonde_;
  stiffness_ = mass_ * diff_;

  lift_.resize(np, 2);
  lift_.col(0) = inv_mass_.col(0);
  lift_.col(1) = inv_mass_.col(np - 1);
}

Eigen::VectorXd ReferenceElement::nodal_to_modal(std::span<const double> nodal) const {
  if (static_cast<int>(nodal.size()) != num_nodes())
    throw std::invalid_argument("nodal_to_modal: size mismatch");
  return inv_vandermonde_ * Eigen::Map<const Eigen::VectorXd>(nodal.data(), num_nodes());
}

Eigen::VectorXd ReferenceElement::modal_to_nodal(std::span<const double> modal) const {
  if (static_cast<int>(modal.size()) != num_nodes())
    throw std::invalid_argument("modal_to_nodal: size mismatch");
  return vandermonde_ * Eigen::Map<const Eigen::VectorXd>(modal.data(), num_nodes());
}

Eigen::MatrixXd ReferenceElement::interpolation_matrix(std::span<const double> points) const {
  const int np = num_nodes();
  Eigen::MatrixXd modal(points.size(), np);
  for (std::size_t q = 0; q < points.size(); ++q)
    for (int j = 0; j < np; ++j) modal(q, j) = legendre_eval(j, points[q]);
  return modal * inv_vandermonde_;
}

Eigen::MatrixXd ReferenceElement::derivative_matrix(std::span<const double> points) const {
  const int np = num_nodes();
  Eigen::MatrixXd modal(points.size(), np);
  for (std::size_t q = 0; q < points.size(); ++q)
    for (int j = 0; j < np; ++j) modal(q, j) = legendre_deriv(j, points[q]);
  return modal * inv_vandermonde_;
}

double ReferenceElement::l2_norm(std::span<const double> nodal, double h) const {
  const Eigen::Map<const Eigen::VectorXd> u(nodal.data(), num_nodes());
  const double sq = u.dot(mass_ * u);
  return std::sqrt(std::max(0.0, 0.5 * h * sq));
}

}  // namespace dgshock
