#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dgshock {

/// Value of the L2([-1,1])-orthonormal Legendre polynomial of degree n at r.
double legendre_eval(int n, double r);

/// Derivative of the orthonormal Legendre polynomial of degree n at r.
double legendre_deriv(int n, double r);

struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1,1]; exact for polynomials of degree 2*npoints-1.
QuadratureRule gauss_legendre(int npoints);

/// Gauss-Lobatto-Legendre rule with N+1 points (endpoints included).
QuadratureRule gauss_lobatto(int degree);

/// Nodal reference element on [-1,1] with Gauss-Lobatto-Legendre nodes and an
/// orthonormal Legendre modal basis.
///
/// Matrices follow the usual nodal DG conventions:
///   V(i,j) = phi_j(r_i),  M = (V V^T)^{-1},  D = Vr V^{-1},  S = M D,
///   L = M^{-1} [e_left | e_right].
/// Physical-space operators on an element of size h scale M by h/2 and D, L
/// by 2/h.
class ReferenceElement {
 public:
  static constexpr int kMaxDegree = 20;

  /// Throws std::invalid_argument unless 1 <= degree <= kMaxDegree.
  explicit ReferenceElement(int degree);

  int degree() const { return degree_; }
  int num_nodes() const { return degree_ + 1; }

  const Eigen::VectorXd& nodes() const { return nodes_; }
  const Eigen::VectorXd& lobatto_weights() const { return lobatto_weights_; }
  const Eigen::MatrixXd& vandermonde() const { return vandermonde_; }
  const Eigen::MatrixXd& inverse_vandermonde() const { return inv_vandermonde_; }
  const Eigen::MatrixXd& mass() const { return mass_; }
  const Eigen::MatrixXd& inverse_mass() const { return inv_mass_; }
  const Eigen::MatrixXd& stiffness() const { return stiffness_; }
  const Eigen::MatrixXd& differentiation() const { return diff_; }
  /// Np x 2; column 0 lifts the left endpoint, column 1 the right endpoint.
  const Eigen::MatrixXd& lift() const { return lift_; }

  Eigen::VectorXd nodal_to_modal(std::span<const double> nodal) const;
  Eigen::VectorXd modal_to_nodal(std::span<const double> modal) const;

  /// Rows evaluate the nodal interpolant at the given reference points.
  Eigen::MatrixXd interpolation_matrix(std::span<const double> points) const;
  /// Rows evaluate the derivative (d/dr) of the nodal interpolant.
  Eigen::MatrixXd derivative_matrix(std::span<const double> points) const;

  /// sqrt(h/2 * u^T M u): L2 norm of the interpolant on an element of size h.
  double l2_norm(std::span<const double> nodal, double h) const;

 private:
  int degree_;
  Eigen::VectorXd nodes_;
  Eigen::VectorXd lobatto_weights_;
  Eigen::MatrixXd vandermonde_;
  Eigen::MatrixXd inv_vandermonde_;
  Eigen::MatrixXd mass_;
  Eigen::MatrixXd inv_mass_;
  Eigen::MatrixXd stiffness_;
  Eigen::MatrixXd diff_;
  Eigen::MatrixXd lift_;
};

}  // namespace dgshock
