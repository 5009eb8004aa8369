#include <doctest.h>

#include <cmath>
#include <limits>

#include "dgshock/detector.hpp"
#include "dgshock/error_norms.hpp"

using namespace dgshock;

TEST_CASE("error norms of polynomial data") {
  const ReferenceElement e(3);
  const Mesh1D m = Mesh1D::uniform(0.0, 2.0, 4, BoundaryKind::dirichlet_farfield);
  FieldState s(1, 4, 4);
  const auto x = node_coordinates(m, e);
  auto f = [](double y) { return y * y * y - y; };
  for (std::size_t i = 0; i < x.size(); ++i) s.values()[i] = f(x[i]);
  CHECK(error_norm(s, 0, m, e, f, 1) < 1e-13);
  CHECK(error_norm(s, 0, m, e, f, 2) < 1e-13);
  auto g = [&](double y) { return f(y) + 0.5; };
  CHECK(error_norm(s, 0, m, e, g, 1) == doctest::Approx(1.0));
  CHECK(error_norm(s, 0, m, e, g, 2) == doctest::Approx(std::sqrt(0.5)));
  // Integral of |y - 1| over (0, 2) against u = 0.
  FieldState z(1, 4, 4);
  CHECK(error_norm(z, 0, m, e, [](double y) { return y - 1.0; }, 1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(error_norm(s, 0, m, e, f, 3), std::invalid_argument);
}

TEST_CASE("EOC fit") {
  const std::vector<double> h = {0.1, 0.05, 0.025, 0.0125};
  std::vector<double> err;
  for (double v : h) err.push_back(3.0 * std::pow(v, 2.5));
  CHECK(eoc_fit(h, err) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK_THROWS_AS(eoc_fit(std::vector<double>{0.1}, std::vector<double>{0.2}),
                  UnderdeterminedFitError);
  CHECK_THROWS_AS(eoc_fit(std::vector<double>{0.1, 0.1}, std::vector<double>{0.2, 0.1}),
                  UnderdeterminedFitError);
  CHECK_THROWS_AS(eoc_fit(std::vector<double>{0.1, 0.05}, std::vector<double>{0.0, 0.1}),
                  std::invalid_argument);
}

TEST_CASE("pointwise EOC map") {
  const std::vector<double> h = {0.2, 0.1, 0.05};
  std::vector<std::vector<double>> errs(3);
  for (int l = 0; l < 3; ++l) errs[l] = {std::pow(h[l], 1.0), 5.0 * std::pow(h[l], 3.0), 0.0};
  errs[1][2] = 1e-3;
  const PointwiseEoc map = pointwise_eoc_map(h, errs);
  REQUIRE(map.eoc.size() == 3);
  CHECK(map.eoc[0] == doctest::Approx(1.0));
  CHECK(map.eoc[1] == doctest::Approx(3.0));
  CHECK(std::isnan(map.eoc[2]));
  CHECK(map.saturated[2]);
  CHECK_FALSE(map.saturated[0]);
}
