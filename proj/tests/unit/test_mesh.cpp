#include <doctest.h>

#include <cmath>

#include "dgshock/mesh.hpp"

using namespace dgshock;

TEST_CASE("uniform mesh geometry") {
  const Mesh1D m = Mesh1D::uniform(-1.0, 1.0, 4, BoundaryKind::periodic);
  CHECK(m.num_elements() == 4);
  CHECK(m.h(2) == doctest::Approx(0.5));
  CHECK(m.h_min() == doctest::Approx(0.5));
  CHECK(m.periodic());
  CHECK(m.map_to_physical(1, -1.0) == doctest::Approx(-0.5));
  CHECK(m.map_to_physical(1, 1.0) == doctest::Approx(0.0));
  CHECK(m.locate(-1.0) == 0);
  CHECK(m.locate(-0.5) == 1);
  CHECK(m.locate(0.99) == 3);
  CHECK(m.locate(1.0) == 3);
  CHECK(m.locate(5.0) == 3);
}

TEST_CASE("mesh validation") {
  CHECK_THROWS_AS(Mesh1D({0.0, 1.0, 1.0}, BoundaryKind::neumann_wave, BoundaryKind::neumann_wave),
                  std::invalid_argument);
  CHECK_THROWS_AS(Mesh1D({0.0}, BoundaryKind::neumann_wave, BoundaryKind::neumann_wave),
                  std::invalid_argument);
  CHECK_THROWS_AS(Mesh1D({0.0, 1.0}, BoundaryKind::periodic, BoundaryKind::dirichlet_farfield),
                  std::invalid_argument);
  CHECK_THROWS_AS(Mesh1D::uniform(0.0, 1.0, 0, BoundaryKind::periodic), std::invalid_argument);
  CHECK_THROWS_AS(Mesh1D::uniform(1.0, 0.0, 3, BoundaryKind::periodic), std::invalid_argument);
}

TEST_CASE("boundary kind names") {
  for (BoundaryKind k : {BoundaryKind::periodic, BoundaryKind::neumann_wave,
                         BoundaryKind::dirichlet_farfield})
    CHECK(parse_boundary_kind(to_string(k)) == k);
  CHECK(parse_boundary_kind("farfield") == BoundaryKind::dirichlet_farfield);
  CHECK_THROWS_AS(parse_boundary_kind("outflow"), std::invalid_argument);
}

TEST_CASE("field state layout and evaluation") {
  const ReferenceElement e(3);
  const Mesh1D m = Mesh1D::uniform(0.0, 2.0, 2, BoundaryKind::dirichlet_farfield);
  FieldState s(2, 2, 4);
  const auto x = node_coordinates(m, e);
  REQUIRE(x.size() == 8);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 4; ++i) {
      const double xi = x[k * 4 + i];
      s(0, k, i) = xi * xi;
      s(1, k, i) = -xi;
    }
  CHECK(s.element(1, 1)[0] == doctest::Approx(-1.0));
  CHECK(s.component(1).size() == 8);
  CHECK(evaluate(s, 0, m, e, 0.3) == doctest::Approx(0.09));
  CHECK(evaluate(s, 1, m, e, 1.7) == doctest::Approx(-1.7));
  CHECK(s.all_finite());
  s(0, 1, 2) = std::nan("");
  CHECK_FALSE(s.all_finite());
}
