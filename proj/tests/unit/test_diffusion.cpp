#include <doctest.h>

#include <cmath>
#include <random>

#include "dgshock/diffusion.hpp"

using namespace dgshock;

namespace {

ViscosityField constant_nu(int k, double v) {
  ViscosityField f;
  f.raw.assign(k, v);
  f.vertex.assign(k + 1, v);
  return f;
}

ViscosityField random_nu(int k, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  std::vector<double> raw(k);
  for (double& v : raw) v = d(rng) < 0.4 ? 0.0 : d(rng);
  ViscosityField f;
  f.raw = raw;
  f.vertex.assign(k + 1, 0.0);
  for (double& v : f.vertex) v = d(rng) < 0.3 ? 0.0 : d(rng);
  return f;
}

double energy_rate(const ReferenceElement& e, const Mesh1D& m, const std::vector<double>& u,
                   const std::vector<double>& r) {
  const int np = e.num_nodes();
  double s = 0.0;
  for (int k = 0; k < m.num_elements(); ++k) {
    const Eigen::Map<const Eigen::VectorXd> uk(u.data() + k * np, np);
    const Eigen::Map<const Eigen::VectorXd> rk(r.data() + k * np, np);
    s += 0.5 * m.h(k) * uk.dot(e.mass() * rk);
  }
  return s;
}

}  // namespace

TEST_CASE("boundary ghost rules") {
  DiffusionBoundary even{DiffusionBoundary::Kind::even, 0.0};
  DiffusionBoundary odd{DiffusionBoundary::Kind::odd, 0.0};
  DiffusionBoundary fixed{DiffusionBoundary::Kind::fixed, 3.0};
  CHECK(even.ghost_u(2.0) == 2.0);
  CHECK(even.ghost_sigma(2.0) == -2.0);
  CHECK(odd.ghost_u(2.0) == -2.0);
  CHECK(odd.ghost_sigma(2.0) == 2.0);
  CHECK(fixed.ghost_u(2.0) == 3.0);
  CHECK(fixed.ghost_sigma(2.0) == 2.0);
}

TEST_CASE("constant viscosity reproduces nu u'' for a quadratic") {
  for (int n : {2, 3, 6}) {
    const ReferenceElement e(n);
    const Mesh1D m({0.0, 0.3, 0.45, 1.0, 1.2}, BoundaryKind::dirichlet_farfield,
                   BoundaryKind::dirichlet_farfield);
    const auto x = node_coordinates(m, e);
    std::vector<double> u(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) u[i] = 1.0 + 2.0 * x[i] - 3.0 * x[i] * x[i];
    const double nu = 0.7;
    const DiffusionBoundary left{DiffusionBoundary::Kind::fixed, 1.0};
    const DiffusionBoundary right{DiffusionBoundary::Kind::fixed, 1.0 + 2.4 - 3.0 * 1.44};
    const auto r = ip_diffusion_rhs(u, constant_nu(4, nu), m, e, left, right);
    for (double v : r) CHECK(v == doctest::Approx(-6.0 * nu).epsilon(1e-9));
  }
}

TEST_CASE("zero viscosity leaves the rate untouched") {
  const ReferenceElement e(3);
  const Mesh1D m = Mesh1D::uniform(0.0, 1.0, 3, BoundaryKind::periodic);
  std::vector<double> u(12, 1.0), out(12, 5.0);
  u[3] = 7.0;
  DiffusionOperator op(e);
  op.apply(u, ViscosityField::zero(3), m, {}, {}, out);
  for (double v : out) CHECK(v == 5.0);
}

TEST_CASE("periodic diffusion conserves mass and dissipates energy") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    const int k = 3 + trial % 5;
    const ReferenceElement e(n);
    std::vector<double> v(k + 1);
    v[0] = 0.0;
    for (int j = 1; j <= k; ++j) v[j] = v[j - 1] + 0.5 + std::abs(d(rng));
    const Mesh1D m(v, BoundaryKind::periodic, BoundaryKind::periodic);
    std::vector<double> u(k * (n + 1));
    for (double& x : u) x = d(rng);
    ViscosityField nu = random_nu(k, rng);
    nu.vertex.back() = nu.vertex.front();
    const auto r = ip_diffusion_rhs(u, nu, m, e);
    const std::vector<double> ones(u.size(), 1.0);
    CHECK(std::abs(energy_rate(e, m, ones, r)) < 1e-11);
    CHECK(energy_rate(e, m, u, r) <= 1e-12);
  }
}

TEST_CASE("even and odd boundaries dissipate energy") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  using K = DiffusionBoundary::Kind;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const int k = 2 + trial % 4;
    const ReferenceElement e(n);
    const Mesh1D m = Mesh1D::uniform(-1.0, 1.0, k, BoundaryKind::neumann_wave);
    std::vector<double> u(k * (n + 1));
    for (double& x : u) x = d(rng);
    const ViscosityField nu = random_nu(k, rng);
    const DiffusionBoundary left{trial % 2 ? K::even : K::odd, 0.0};
    const DiffusionBoundary right{trial % 3 ? K::odd : K::even, 0.0};
    const auto r = ip_diffusion_rhs(u, nu, m, e, left, right);
    CHECK(energy_rate(e, m, u, r) <= 1e-12);
    if (left.kind == K::even && right.kind == K::even) {
      const std::vector<double> ones(u.size(), 1.0);
      CHECK(std::abs(energy_rate(e, m, ones, r)) < 1e-11);
    }
  }
}
