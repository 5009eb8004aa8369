#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dgshock/diffusion.hpp"
#include "dgshock/euler.hpp"
#include "dgshock/mesh.hpp"
#include "dgshock/reference_element.hpp"
#include "dgshock/timeint.hpp"
#include "dgshock/viscosity.hpp"

namespace dgshock {

enum class ProblemKind { advection, wave, euler };

std::string to_string(ProblemKind kind);
ProblemKind parse_problem_kind(const std::string& name);

/// Initial data in conserved variables, one value per equation.
using InitialCondition = std::function<std::vector<double>(double x)>;

struct ProblemDefinition {
  ProblemKind kind = ProblemKind::advection;
  double velocity = 1.0;    // advection speed v
  double wave_speed = 1.0;  // c
  double gamma = kDefaultGamma;
  double final_time = 1.0;
  std::string ic_name;
  InitialCondition initial;

  int num_equations() const;
  /// Component fed to the smoothness detector (u, u and rho respectively).
  int detector_component() const { return 0; }
  /// Throws std::invalid_argument on inconsistent parameters.
  void validate() const;
};

enum class Side { left, right };

/// Semidiscrete DG operator for one problem on one mesh.
///
/// Advection and the wave system use the strong form with upwind fluxes.
/// Euler uses the weak form with Rusanov fluxes and Gauss quadrature of
/// ceil((3N+1)/2) points for the flux integrals. The artificial viscosity
/// term is added to every component.
class DGOperator {
 public:
  DGOperator(ProblemDefinition problem, Mesh1D mesh, int degree);

  const ProblemDefinition& problem() const { return problem_; }
  const Mesh1D& mesh() const { return mesh_; }
  const ReferenceElement& element() const { return elem_; }
  int num_equations() const { return neq_; }
  std::size_t state_size() const;

  /// Nodal interpolation of the initial condition.
  FieldState initial_state() const;

  /// Exterior state at a domain boundary given the interior trace there.
  std::vector<double> ghost_state(Side side, std::span<const double> interior) const;

  /// Global maximum characteristic speed over all nodes.
  double max_speed(std::span<const double> values) const;
  double max_speed(const FieldState& state) const { return max_speed(state.values()); }

  ViscosityField viscosity(std::span<const double> values, double lambda_max,
                           const ViscosityConfig& config) const;

  /// out = semidiscrete rate (overwritten).
  void rhs(std::span<const double> values, const ViscosityField& nu,
           std::span<double> out) const;
  FieldState rhs(const FieldState& state, const ViscosityField& nu) const;

  /// Convective part only (no diffusion).
  void convective_rhs(std::span<const double> values, std::span<double> out) const;

 private:
  double at(std::span<const double> v, int eq, int k, int i) const {
    return v[(static_cast<std::size_t>(eq) * mesh_.num_elements() + k) * np_ + i];
  }
  void advection_rhs(std::span<const double> v, std::span<double> out) const;
  void wave_rhs(std::span<const double> v, std::span<double> out) const;
  void euler_rhs(std::span<const double> v, std::span<double> out) const;
  /// Values of all components on the left/right side of vertex j.
  void face_states(std::span<const double> v, int j, double* left, double* right) const;
  DiffusionBoundary diffusion_boundary(Side side, int eq) const;

  ProblemDefinition problem_;
  Mesh1D mesh_;
  ReferenceElement elem_;
  int np_;
  int neq_;
  std::vector<double> farfield_left_;
  std::vector<double> farfield_right_;
  DiffusionOperator diffusion_;
  Eigen::MatrixXd quad_interp_;  // Q x Np
  Eigen::MatrixXd weak_volume_;  // Np x Q, M^{-1} Dq^T W
};

/// Adapts a DGOperator to the time integrator: the viscosity field and
/// lambda_max are refreshed at every step start and frozen over the stages.
class DGSystem : public OdeSystem {
 public:
  DGSystem(const DGOperator& op, ViscosityConfig viscosity, double cfl);

  StepContext begin_step(double t, std::span<const double> y) override;
  void rhs(double t, std::span<const double> y, std::span<double> dydt) override;

  const ViscosityField& current_viscosity() const { return nu_; }
  double current_lambda() const { return lambda_; }

 private:
  const DGOperator& op_;
  ViscosityConfig config_;
  double cfl_;
  ViscosityField nu_;
  double lambda_ = 0.0;
  bool initialized_ = false;
};

}  // namespace dgshock
