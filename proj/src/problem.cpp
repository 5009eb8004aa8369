#include "dgshock/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dgshock/fluxes.hpp"

namespace dgshock {

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::advection: return "advection";
    case ProblemKind::wave: return "wave";
    case ProblemKind::euler: return "euler";
  }
  return "unknown";
}

ProblemKind parse_problem_kind(const std::string& name) {
  if (name == "advection") return ProblemKind::advection;
  if (name == "wave") return ProblemKind::wave;
  if (name == "euler") return ProblemKind::euler;
  throw std::invalid_argument("unknown problem kind '" + name + "'");
}

int ProblemDefinition::num_equations() const {
  switch (kind) {
    case ProblemKind::advection: return 1;
    case ProblemKind::wave: return 2;
    case ProblemKind::euler: return 3;
  }
  return 0;
}

void ProblemDefinition::validate() const {
  if (!initial) throw std::invalid_argument("problem.ic: no initial condition");
  if (!(final_time > 0.0)) throw std::invalid_argument("problem.T must be positive");
  if (kind == ProblemKind::wave && !(wave_speed > 0.0))
    throw std::invalid_argument("problem.c must be positive");
  if (kind == ProblemKind::euler && !(gamma > 1.0))
    throw std::invalid_argument("problem.gamma must exceed 1");
  if (kind == ProblemKind::advection && !std::isfinite(velocity))
    throw std::invalid_argument("problem.velocity must be finite");
}

namespace {

std::vector<double> evaluate_initial(const ProblemDefinition& problem, double x) {
  std::vector<double> v = problem.initial(x);
  if (static_cast<int>(v.size()) != problem.num_equations())
    throw std::invalid_argument("initial condition '" + problem.ic_name +
                                "' returned the wrong number of components");
  return v;
}

}  // namespace

DGOperator::DGOperator(ProblemDefinition problem, Mesh1D mesh, int degree)
    : problem_(std::move(problem)),
      mesh_(std::move(mesh)),
      elem_(degree),
      np_(degree + 1),
      neq_(problem_.num_equations()),
      diffusion_(elem_) {
  problem_.validate();
  for (Side side : {Side::left, Side::right}) {
    const BoundaryKind bc = side == Side::left ? mesh_.left_bc() : mesh_.right_bc();
    if (bc == BoundaryKind::neumann_wave && problem_.kind != ProblemKind::wave)
      throw std::invalid_argument("mesh.bc: neumann-wave boundary requires problem.kind = wave");
  }
  const double eps = 1e-12 * mesh_.length();
  farfield_left_ = evaluate_initial(problem_, mesh_.a() + eps);
  farfield_right_ = evaluate_initial(problem_, mesh_.b() - eps);

  if (problem_.kind == ProblemKind::euler) {
    const int nq = (3 * degree + 1 + 1) / 2;  // ceil((3N+1)/2)
    const QuadratureRule rule = gauss_legendre(nq);
    quad_interp_ = elem_.interpolation_matrix(rule.points);
    const Eigen::MatrixXd dq = elem_.derivative_matrix(rule.points);
    const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), nq);
    weak_volume_ = elem_.inverse_mass() * dq.transpose() * w.asDiagonal();
  }
}

std::size_t DGOperator::state_size() const {
  return static_cast<std::size_t>(neq_) * mesh_.num_elements() * np_;
}

FieldState DGOperator::initial_state() const {
  const int K = mesh_.num_elements();
  FieldState state(neq_, K, np_);
  for (int k = 0; k < K; ++k) {
    // Endpoint nodes take the one-sided limit from inside their element.
    const double eps = 1e-12 * mesh_.h(k);
    for (int i = 0; i < np_; ++i) {
      double x = mesh_.map_to_physical(k, elem_.nodes()(i));
      if (i == 0) x += eps;
      if (i == np_ - 1) x -= eps;
      const std::vector<double> v = evaluate_initial(problem_, x);
      for (int eq = 0; eq < neq_; ++eq) state(eq, k, i) = v[eq];
    }
  }
  return state;
}

std::vector<double> DGOperator::ghost_state(Side side, std::span<const double> interior) const {
  const BoundaryKind bc = side == Side::left ? mesh_.left_bc() : mesh_.right_bc();
  switch (bc) {
    case BoundaryKind::periodic:
      throw std::logic_error("ghost_state: periodic boundaries have no ghost");
    case BoundaryKind::neumann_wave:
      return {interior[0], -interior[1]};
    case BoundaryKind::dirichlet_farfield:
      return side == Side::left ? farfield_left_ : farfield_right_;
  }
  return {};
}

void DGOperator::face_states(std::span<const double> v, int j, double* left,
                             double* right) const {
  const int K = mesh_.num_elements();
  const int last = np_ - 1;
  if (j > 0 && j < K) {
    for (int eq = 0; eq < neq_; ++eq) {
      left[eq] = at(v, eq, j - 1, last);
      right[eq] = at(v, eq, j, 0);
    }
    return;
  }
  if (mesh_.periodic()) {
    for (int eq = 0; eq < neq_; ++eq) {
      left[eq] = at(v, eq, K - 1, last);
      right[eq] = at(v, eq, 0, 0);
    }
    return;
  }
  std::vector<double> interior(neq_);
  if (j == 0) {
    for (int eq = 0; eq < neq_; ++eq) right[eq] = interior[eq] = at(v, eq, 0, 0);
    const std::vector<double> g = ghost_state(Side::left, interior);
    std::copy(g.begin(), g.end(), left);
  } else {
    for (int eq = 0; eq < neq_; ++eq) left[eq] = interior[eq] = at(v, eq, K - 1, last);
    const std::vector<double> g = ghost_state(Side::right, interior);
    std::copy(g.begin(), g.end(), right);
  }
}

double DGOperator::max_speed(std::span<const double> values) const {
  switch (problem_.kind) {
    case ProblemKind::advection: return std::abs(problem_.velocity);
    case ProblemKind::wave: return problem_.wave_speed;
    case ProblemKind::euler: break;
  }
  double m = 0.0;
  for (int k = 0; k < mesh_.num_elements(); ++k) {
    for (int i = 0; i < np_; ++i) {
      const EulerState u{at(values, 0, k, i), at(values, 1, k, i), at(values, 2, k, i)};
      m = std::max(m, euler_max_speed(u, problem_.gamma, k));
    }
  }
  return m;
}

ViscosityField DGOperator::viscosity(std::span<const double> values, double lambda_max,
                                     const ViscosityConfig& config) const {
  if (values.size() != state_size()) throw std::invalid_argument("viscosity: size mismatch");
  FieldState view(neq_, mesh_.num_elements(), np_);
  view.values().assign(values.begin(), values.end());
  return compute_viscosity(view, problem_.detector_component(), lambda_max, mesh_, elem_,
                           config);
}

void DGOperator::advection_rhs(std::span<const double> v, std::span<double> out) const {
  const int K = mesh_.num_elements();
  const double a = problem_.velocity;
  const Eigen::MatrixXd& D = elem_.differentiation();
  const auto lift_l = elem_.lift().col(0);
  const auto lift_r = elem_.lift().col(1);

  std::vector<double> fstar(K + 1);
  for (int j = 0; j <= K; ++j) {
    double l, r;
    face_states(v, j, &l, &r);
    fstar[j] = upwind_flux_advection(l, r, a, 1.0);
  }
  for (int k = 0; k < K; ++k) {
    const Eigen::Map<const Eigen::VectorXd> u(v.data() + static_cast<std::size_t>(k) * np_, np_);
    Eigen::Map<Eigen::VectorXd> o(out.data() + static_cast<std::size_t>(k) * np_, np_);
    const double scale = 2.0 / mesh_.h(k);
    o.noalias() = -a * (D * u);
    o += (fstar[k] - a * u(0)) * lift_l;
    o += (a * u(np_ - 1) - fstar[k + 1]) * lift_r;
    o *= scale;
  }
}

void DGOperator::wave_rhs(std::span<const double> v, std::span<double> out) const {
  const int K = mesh_.num_elements();
  const double c = problem_.wave_speed;
  const Eigen::MatrixXd& D = elem_.differentiation();
  const auto lift_l = elem_.lift().col(0);
  const auto lift_r = elem_.lift().col(1);
  const std::size_t comp = static_cast<std::size_t>(K) * np_;

  std::vector<std::array<double, 2>> fstar(K + 1);
  for (int j = 0; j <= K; ++j) {
    double l[2], r[2];
    face_states(v, j, l, r);
    fstar[j] = wave_upwind_flux(l[0], l[1], r[0], r[1], c);
  }
  for (int k = 0; k < K; ++k) {
    const std::size_t off = static_cast<std::size_t>(k) * np_;
    const Eigen::Map<const Eigen::VectorXd> u(v.data() + off, np_);
    const Eigen::Map<const Eigen::VectorXd> w(v.data() + comp + off, np_);
    Eigen::Map<Eigen::VectorXd> ou(out.data() + off, np_);
    Eigen::Map<Eigen::VectorXd> ow(out.data() + comp + off, np_);
    const double scale = 2.0 / mesh_.h(k);
    // Flux (c v, c u).
    ou.noalias() = -c * (D * w);
    ou += (fstar[k][0] - c * w(0)) * lift_l;
    ou += (c * w(np_ - 1) - fstar[k + 1][0]) * lift_r;
    ou *= scale;
    ow.noalias() = -c * (D * u);
    ow += (fstar[k][1] - c * u(0)) * lift_l;
    ow += (c * u(np_ - 1) - fstar[k + 1][1]) * lift_r;
    ow *= scale;
  }
}

void DGOperator::euler_rhs(std::span<const double> v, std::span<double> out) const {
  const int K = mesh_.num_elements();
  const double gamma = problem_.gamma;
  const auto lift_l = elem_.lift().col(0);
  const auto lift_r = elem_.lift().col(1);
  const std::size_t comp = static_cast<std::size_t>(K) * np_;
  const int nq = static_cast<int>(quad_interp_.rows());

  std::vector<EulerState> fstar(K + 1);
  for (int j = 0; j <= K; ++j) {
    EulerState l, r;
    face_states(v, j, l.data(), r.data());
    const int elem_index = std::clamp(j, 0, K - 1);
    fstar[j] = euler_llf_flux(l, r, gamma, elem_index);
  }

  Eigen::MatrixXd uq(nq, 3), fq(nq, 3), vol(np_, 3);
  for (int k = 0; k < K; ++k) {
    const std::size_t off = static_cast<std::size_t>(k) * np_;
    for (int eq = 0; eq < 3; ++eq) {
      const Eigen::Map<const Eigen::VectorXd> u(v.data() + eq * comp + off, np_);
      uq.col(eq).noalias() = quad_interp_ * u;
    }
    for (int q = 0; q < nq; ++q) {
      const EulerState f = euler_flux({uq(q, 0), uq(q, 1), uq(q, 2)}, gamma, k);
      fq(q, 0) = f[0];
      fq(q, 1) = f[1];
      fq(q, 2) = f[2];
    }
    vol.noalias() = weak_volume_ * fq;
    const double scale = 2.0 / mesh_.h(k);
    for (int eq = 0; eq < 3; ++eq) {
      Eigen::Map<Eigen::VectorXd> o(out.data() + eq * comp + off, np_);
      o = scale * (vol.col(eq) - fstar[k + 1][eq] * lift_r + fstar[k][eq] * lift_l);
    }
  }
}

void DGOperator::convective_rhs(std::span<const double> values, std::span<double> out) const {
  if (values.size() != state_size() || out.size() != state_size())
    throw std::invalid_argument("rhs: size mismatch");
  switch (problem_.kind) {
    case ProblemKind::advection: advection_rhs(values, out); break;
    case ProblemKind::wave: wave_rhs(values, out); break;
    case ProblemKind::euler: euler_rhs(values, out); break;
  }
}

DiffusionBoundary DGOperator::diffusion_boundary(Side side, int eq) const {
  const BoundaryKind bc = side == Side::left ? mesh_.left_bc() : mesh_.right_bc();
  DiffusionBoundary b;
  if (bc == BoundaryKind::neumann_wave) {
    b.kind = eq == 0 ? DiffusionBoundary::Kind::even : DiffusionBoundary::Kind::odd;
  } else {
    b.kind = DiffusionBoundary::Kind::fixed;
    b.value = side == Side::left ? farfield_left_[eq] : farfield_right_[eq];
  }
  return b;
}

void DGOperator::rhs(std::span<const double> values, const ViscosityField& nu,
                     std::span<double> out) const {
  convective_rhs(values, out);
  if (nu.all_zero()) return;
  const std::size_t comp = static_cast<std::size_t>(mesh_.num_elements()) * np_;
  for (int eq = 0; eq < neq_; ++eq) {
    diffusion_.apply(values.subspan(eq * comp, comp), nu, mesh_,
                     diffusion_boundary(Side::left, eq), diffusion_boundary(Side::right, eq),
                     out.subspan(eq * comp, comp));
  }
}

FieldState DGOperator::rhs(const FieldState& state, const ViscosityField& nu) const {
  FieldState out(neq_, mesh_.num_elements(), np_);
  out.set_time(state.time());
  rhs(state.values(), nu, out.values());
  return out;
}

DGSystem::DGSystem(const DGOperator& op, ViscosityConfig viscosity, double cfl)
    : op_(op), config_(std::move(viscosity)), cfl_(cfl) {
  if (!(cfl > 0.0)) throw std::invalid_argument("time.cfl must be positive");
  nu_ = ViscosityField::zero(op.mesh().num_elements());
}

StepContext DGSystem::begin_step(double /*t*/, std::span<const double> y) {
  lambda_ = op_.max_speed(y);
  ViscosityField next = op_.viscosity(y, lambda_, config_);
  StepContext ctx;
  ctx.changed = !initialized_ || next.vertex != nu_.vertex;
  nu_ = std::move(next);
  initialized_ = true;
  ctx.nu_max = nu_.max();
  ctx.active_elements = static_cast<int>(
      std::count_if(nu_.raw.begin(), nu_.raw.end(), [](double x) { return x > 0.0; }));
  ctx.dt_cap = dt_cap(lambda_, ctx.nu_max, op_.mesh().h_min(), op_.element().degree(), cfl_);
  return ctx;
}

void DGSystem::rhs(double /*t*/, std::span<const double> y, std::span<double> dydt) {
  op_.rhs(y, nu_, dydt);
}

}  // namespace dgshock
