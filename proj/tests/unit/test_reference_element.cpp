#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dgshock/reference_element.hpp"

using namespace dgshock;

namespace {

// Lagrange interpolant through (nodes, values) evaluated directly from the
// product formula, independent of the Vandermonde machinery.
double lagrange_eval(const Eigen::VectorXd& nodes, const std::vector<double>& values, double r) {
  double sum = 0.0;
  for (int i = 0; i < nodes.size(); ++i) {
    double li = 1.0;
    for (int j = 0; j < nodes.size(); ++j)
      if (j != i) li *= (r - nodes(j)) / (nodes(i) - nodes(j));
    sum += values[i] * li;
  }
  return sum;
}

std::vector<double> nodal_of(const ReferenceElement& e, double (*f)(double)) {
  std::vector<double> v(e.num_nodes());
  for (int i = 0; i < e.num_nodes(); ++i) v[i] = f(e.nodes()(i));
  return v;
}

}  // namespace

TEST_CASE("orthonormal Legendre values") {
  CHECK(legendre_eval(0, 0.3) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(legendre_eval(1, 1.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  // Explicit degree-4 polynomial.
  for (double r : {-1.0, -0.7, 0.0, 0.25, 0.9, 1.0}) {
    const double p4 = (35.0 * std::pow(r, 4) - 30.0 * r * r + 3.0) / 8.0;
    CHECK(legendre_eval(4, r) == doctest::Approx(std::sqrt(4.5) * p4).epsilon(1e-14));
    const double dp4 = (140.0 * std::pow(r, 3) - 60.0 * r) / 8.0;
    CHECK(legendre_deriv(4, r) == doctest::Approx(std::sqrt(4.5) * dp4).epsilon(1e-13));
  }
}

TEST_CASE("Legendre orthonormality under Gauss quadrature") {
  const QuadratureRule rule = gauss_legendre(20);
  for (int m = 0; m < 12; ++m) {
    for (int n = 0; n < 12; ++n) {
      double s = 0.0;
      for (std::size_t q = 0; q < rule.points.size(); ++q)
        s += rule.weights[q] * legendre_eval(m, rule.points[q]) * legendre_eval(n, rule.points[q]);
      CHECK(s == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("quadrature rules") {
  const QuadratureRule g = gauss_legendre(5);
  double s = 0.0;
  for (std::size_t q = 0; q < g.points.size(); ++q) s += g.weights[q] * std::pow(g.points[q], 8);
  CHECK(s == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  const QuadratureRule l = gauss_lobatto(4);
  CHECK(l.points.front() == -1.0);
  CHECK(l.points.back() == 1.0);
  CHECK(l.points[2] == doctest::Approx(0.0).scale(1.0));
  CHECK(l.points[3] == doctest::Approx(std::sqrt(3.0 / 7.0)).epsilon(1e-14));
  double w = 0.0;
  for (double x : l.weights) w += x;
  CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("reference element rejects degrees outside [1,20]") {
  CHECK_THROWS_AS(ReferenceElement(0), std::invalid_argument);
  CHECK_THROWS_AS(ReferenceElement(21), std::invalid_argument);
  CHECK_NOTHROW(ReferenceElement(20));
}

TEST_CASE("N=1 differentiation matrix") {
  const ReferenceElement e(1);
  const Eigen::MatrixXd& D = e.differentiation();
  CHECK(D(0, 0) == doctest::Approx(-0.5));
  CHECK(D(0, 1) == doctest::Approx(0.5));
  CHECK(D(1, 0) == doctest::Approx(-0.5));
  CHECK(D(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("operator identities") {
  for (int n : {1, 2, 5, 10, 15}) {
    const ReferenceElement e(n);
    const Eigen::MatrixXd& M = e.mass();
    CHECK((M - M.transpose()).norm() < 1e-13);
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    CHECK(llt.info() == Eigen::Success);
    CHECK((e.differentiation() - e.inverse_mass() * e.stiffness()).norm() < 1e-10);
    for (int i = 0; i < e.num_nodes(); ++i)
      CHECK(std::abs(e.differentiation().row(i).sum()) < 1e-12);
    // D r^m = m r^{m-1}
    for (int m = 1; m <= n; ++m) {
      Eigen::VectorXd u(e.num_nodes()), du(e.num_nodes());
      for (int i = 0; i < e.num_nodes(); ++i) {
        u(i) = std::pow(e.nodes()(i), m);
        du(i) = m * std::pow(e.nodes()(i), m - 1);
      }
      CHECK((e.differentiation() * u - du).cwiseAbs().maxCoeff() < 1e-10);
    }
    // M L = [e_left | e_right]
    const Eigen::MatrixXd ml = M * e.lift();
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(e.num_nodes(), 2);
    expected(0, 0) = 1.0;
    expected(e.num_nodes() - 1, 1) = 1.0;
    CHECK((ml - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("N=5 differentiates r^5 exactly") {
  const ReferenceElement e(5);
  Eigen::VectorXd u(6), du(6);
  for (int i = 0; i < 6; ++i) {
    u(i) = std::pow(e.nodes()(i), 5);
    du(i) = 5.0 * std::pow(e.nodes()(i), 4);
  }
  CHECK((e.differentiation() * u - du).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("N=10 mass matrix equals quadrature of Lagrange products") {
  const int n = 10;
  const ReferenceElement e(n);
  const QuadratureRule rule = gauss_legendre((3 * n + 1 + 1) / 2);
  const int np = e.num_nodes();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(np, np);
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    std::vector<double> li(np);
    for (int i = 0; i < np; ++i) {
      std::vector<double> unit(np, 0.0);
      unit[i] = 1.0;
      li[i] = lagrange_eval(e.nodes(), unit, rule.points[q]);
    }
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) m(i, j) += rule.weights[q] * li[i] * li[j];
  }
  CHECK((m - e.mass()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("nodal to modal transforms") {
  const ReferenceElement e(6);
  const std::vector<double> c(7, 2.5);
  const Eigen::VectorXd q = e.nodal_to_modal(c);
  CHECK(q(0) == doctest::Approx(2.5 * std::sqrt(2.0)).epsilon(1e-13));
  for (int n = 1; n < 7; ++n) CHECK(std::abs(q(n)) < 1e-13);

  std::vector<double> phi3(7);
  for (int i = 0; i < 7; ++i) phi3[i] = legendre_eval(3, e.nodes()(i));
  const Eigen::VectorXd q3 = e.nodal_to_modal(phi3);
  for (int n = 0; n < 7; ++n) CHECK(q3(n) == doctest::Approx(n == 3 ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(e.nodal_to_modal(std::vector<double>(3)), std::invalid_argument);
}

TEST_CASE("Parseval and round trip for random data") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n = 1; n <= 15; ++n) {
    const ReferenceElement e(n);
    std::vector<double> x(e.num_nodes());
    for (double& v : x) v = dist(rng);
    const Eigen::VectorXd q = e.nodal_to_modal(x);
    const Eigen::VectorXd back = e.modal_to_nodal(std::span<const double>(q.data(), q.size()));
    for (int i = 0; i < e.num_nodes(); ++i) CHECK(back(i) == doctest::Approx(x[i]).scale(1.0).epsilon(1e-12));
    const Eigen::Map<const Eigen::VectorXd> u(x.data(), e.num_nodes());
    CHECK(q.squaredNorm() == doctest::Approx(u.dot(e.mass() * u)).epsilon(1e-12));
  }
}

TEST_CASE("Heaviside spectrum matches a 200-point projection of the interpolant") {
  const ReferenceElement e(9);
  const std::vector<double> nodal =
      nodal_of(e, [](double r) { return r >= 0.0 ? 1.0 : 0.0; });
  const Eigen::VectorXd q = e.nodal_to_modal(nodal);
  const QuadratureRule rule = gauss_legendre(200);
  for (int n = 0; n < e.num_nodes(); ++n) {
    double s = 0.0;
    for (std::size_t k = 0; k < rule.points.size(); ++k)
      s += rule.weights[k] * lagrange_eval(e.nodes(), nodal, rule.points[k]) *
           legendre_eval(n, rule.points[k]);
    CHECK(q(n) == doctest::Approx(s).scale(1.0).epsilon(1e-11));
  }
}

TEST_CASE("element L2 norm") {
  const ReferenceElement e(5);
  CHECK(e.l2_norm(std::vector<double>(6, 1.0), 2.0) == doctest::Approx(std::sqrt(2.0)));
  std::vector<double> phi1(6);
  for (int i = 0; i < 6; ++i) phi1[i] = legendre_eval(1, e.nodes()(i));
  CHECK(e.l2_norm(phi1, 2.0) == doctest::Approx(1.0).epsilon(1e-13));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(6);
  for (double& v : x) v = dist(rng);
  const double h = 0.37;
  const QuadratureRule rule = gauss_legendre(200);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.points.size(); ++k) {
    const double v = lagrange_eval(e.nodes(), x, rule.points[k]);
    s += rule.weights[k] * v * v;
  }
  CHECK(e.l2_norm(x, h) == doctest::Approx(std::sqrt(0.5 * h * s)).epsilon(1e-10));
}

TEST_CASE("interpolation and derivative matrices reproduce polynomials") {
  const ReferenceElement e(4);
  std::vector<double> pts = {-0.9, -0.1, 0.33, 0.8};
  std::vector<double> nodal(5);
  for (int i = 0; i < 5; ++i) nodal[i] = std::pow(e.nodes()(i), 3) - e.nodes()(i);
  const Eigen::Map<const Eigen::VectorXd> u(nodal.data(), 5);
  const Eigen::VectorXd val = e.interpolation_matrix(pts) * u;
  const Eigen::VectorXd der = e.derivative_matrix(pts) * u;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    CHECK(val(k) == doctest::Approx(std::pow(pts[k], 3) - pts[k]).scale(1.0).epsilon(1e-12));
    CHECK(der(k) == doctest::Approx(3 * pts[k] * pts[k] - 1).scale(1.0).epsilon(1e-11));
  }
}
