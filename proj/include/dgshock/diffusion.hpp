#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dgshock/mesh.hpp"
#include "dgshock/reference_element.hpp"
#include "dgshock/viscosity.hpp"

namespace dgshock {

/// Exterior data seen by the diffusion operator at a non-periodic boundary.
///   even:  u_ghost = u,      sigma_ghost = -sigma  (zero normal flux)
///   odd:   u_ghost = -u,     sigma_ghost = sigma
///   fixed: u_ghost = value,  sigma_ghost = sigma
struct DiffusionBoundary {
  enum class Kind { even, odd, fixed };
  Kind kind = Kind::fixed;
  double value = 0.0;

  double ghost_u(double u) const;
  double ghost_sigma(double sigma) const;
};

/// Interior-penalty discretization of d/dx(nu du/dx) for one scalar component
/// stored element-major (K * Np values).
///
/// Pass 1 computes q = du/dx in strong form with central flux u* = {u} and
/// projects nu * q (nu linear per element) onto P^N to get sigma. Pass 2
/// takes the weak-form divergence with
///   sigma* = {sigma} - N^2 / min(h_left, h_right) * nu_face * (u_left - u_right).
class DiffusionOperator {
 public:
  explicit DiffusionOperator(const ReferenceElement& elem);

  /// out += rate. `left`/`right` are ignored on periodic meshes.
  void apply(std::span<const double> u, const ViscosityField& nu, const Mesh1D& mesh,
             const DiffusionBoundary& left, const DiffusionBoundary& right,
             std::span<double> out) const;

 private:
  int np_;
  int degree_;
  Eigen::MatrixXd diff_;
  Eigen::VectorXd lift_left_;
  Eigen::VectorXd lift_right_;
  Eigen::MatrixXd weak_div_;  // M^{-1} S^T
  Eigen::MatrixXd proj_left_;   // M^{-1} int (1-r)/2 l_i l_j
  Eigen::MatrixXd proj_right_;  // M^{-1} int (1+r)/2 l_i l_j

  // Scratch space reused between calls.
  mutable std::vector<double> sigma_;
  mutable std::vector<double> u_star_;
};

/// Convenience wrapper returning the diffusion rate of one component.
std::vector<double> ip_diffusion_rhs(std::span<const double> u, const ViscosityField& nu,
                                     const Mesh1D& mesh, const ReferenceElement& elem,
                                     const DiffusionBoundary& left = {},
                                     const DiffusionBoundary& right = {});

}  // namespace dgshock
