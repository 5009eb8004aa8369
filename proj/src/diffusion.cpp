#include "dgshock/diffusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgshock {

double DiffusionBoundary::ghost_u(double u) const {
  switch (kind) {
    case Kind::even: return u;
    case Kind::odd: return -u;
    case Kind::fixed: return value;
  }
  return u;
}

double DiffusionBoundary::ghost_sigma(double sigma) const {
  return kind == Kind::even ? -sigma : sigma;
}

DiffusionOperator::DiffusionOperator(const ReferenceElement& elem)
    : np_(elem.num_nodes()), degree_(elem.degree()) {
  diff_ = elem.differentiation();
  lift_left_ = elem.lift().col(0);
  lift_right_ = elem.lift().col(1);
  weak_div_ = elem.inverse_mass() * elem.stiffness().transpose();

  const QuadratureRule rule = gauss_legendre(np_ + 1);
  const Eigen::MatrixXd interp = elem.interpolation_matrix(rule.points);
  Eigen::MatrixXd m_left = Eigen::MatrixXd::Zero(np_, np_);
  Eigen::MatrixXd m_right = Eigen::MatrixXd::Zero(np_, np_);
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const double r = rule.points[q];
    const Eigen::VectorXd row = interp.row(q).transpose();
    m_left += rule.weights[q] * 0.5 * (1.0 - r) * row * row.transpose();
    m_right += rule.weights[q] * 0.5 * (1.0 + r) * row * row.transpose();
  }
  proj_left_ = elem.inverse_mass() * m_left;
  proj_right_ = elem.inverse_mass() * m_right;
}

void DiffusionOperator::apply(std::span<const double> u, const ViscosityField& nu,
                              const Mesh1D& mesh, const DiffusionBoundary& left,
                              const DiffusionBoundary& right, std::span<double> out) const {
  const int K = mesh.num_elements();
  const int np = np_;
  const std::size_t total = static_cast<std::size_t>(K) * np;
  if (u.size() != total || out.size() != total)
    throw std::invalid_argument("DiffusionOperator: size mismatch");
  if (nu.num_elements() != K) throw std::invalid_argument("DiffusionOperator: nu size mismatch");
  if (nu.all_zero()) return;

  const bool periodic = mesh.periodic();
  auto first = [&](int k) { return u[static_cast<std::size_t>(k) * np]; };
  auto last = [&](int k) { return u[static_cast<std::size_t>(k) * np + np - 1]; };

  // Exterior u on each side of every vertex.
  auto u_left_of = [&](int j) {
    if (j > 0) return last(j - 1);
    return periodic ? last(K - 1) : left.ghost_u(first(0));
  };
  auto u_right_of = [&](int j) {
    if (j < K) return first(j);
    return periodic ? first(0) : right.ghost_u(last(K - 1));
  };

  u_star_.resize(K + 1);
  for (int j = 0; j <= K; ++j) u_star_[j] = 0.5 * (u_left_of(j) + u_right_of(j));

  sigma_.resize(total);
  Eigen::VectorXd q(np), face(np);
  for (int k = 0; k < K; ++k) {
    const Eigen::Map<const Eigen::VectorXd> uk(u.data() + static_cast<std::size_t>(k) * np, np);
    const double scale = 2.0 / mesh.h(k);
    q.noalias() = diff_ * uk;
    q -= (u_star_[k] - uk(0)) * lift_left_;
    q += (u_star_[k + 1] - uk(np - 1)) * lift_right_;
    q *= scale;
    Eigen::Map<Eigen::VectorXd> sk(sigma_.data() + static_cast<std::size_t>(k) * np, np);
    sk.noalias() = nu.left(k) * (proj_left_ * q);
    sk.noalias() += nu.right(k) * (proj_right_ * q);
  }

  auto sigma_first = [&](int k) { return sigma_[static_cast<std::size_t>(k) * np]; };
  auto sigma_last = [&](int k) { return sigma_[static_cast<std::size_t>(k) * np + np - 1]; };
  const double n2 = static_cast<double>(degree_) * degree_;

  // sigma* at vertex j.
  auto sigma_star = [&](int j) {
    double s_left, s_right, h;
    if (j == 0) {
      s_right = sigma_first(0);
      s_left = periodic ? sigma_last(K - 1) : left.ghost_sigma(s_right);
      h = periodic ? std::min(mesh.h(0), mesh.h(K - 1)) : mesh.h(0);
    } else if (j == K) {
      s_left = sigma_last(K - 1);
      s_right = periodic ? sigma_first(0) : right.ghost_sigma(s_left);
      h = periodic ? std::min(mesh.h(0), mesh.h(K - 1)) : mesh.h(K - 1);
    } else {
      s_left = sigma_last(j - 1);
      s_right = sigma_first(j);
      h = std::min(mesh.h(j - 1), mesh.h(j));
    }
    const double jump = u_left_of(j) - u_right_of(j);
    return 0.5 * (s_left + s_right) - n2 / h * nu.vertex[j] * jump;
  };

  double star_left = sigma_star(0);
  for (int k = 0; k < K; ++k) {
    const double star_right = sigma_star(k + 1);
    const Eigen::Map<const Eigen::VectorXd> sk(sigma_.data() + static_cast<std::size_t>(k) * np,
                                               np);
    face.noalias() = -(weak_div_ * sk);
    face += star_right * lift_right_;
    face -= star_left * lift_left_;
    Eigen::Map<Eigen::VectorXd> ok(out.data() + static_cast<std::size_t>(k) * np, np);
    ok += (2.0 / mesh.h(k)) * face;
    star_left = star_right;
  }
}

std::vector<double> ip_diffusion_rhs(std::span<const double> u, const ViscosityField& nu,
                                     const Mesh1D& mesh, const ReferenceElement& elem,
                                     const DiffusionBoundary& left,
                                     const DiffusionBoundary& right) {
  std::vector<double> out(u.size(), 0.0);
  DiffusionOperator(elem).apply(u, nu, mesh, left, right, out);
  return out;
}

}  // namespace dgshock
