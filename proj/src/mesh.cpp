#include "dgshock/mesh.hpp"

#include <algorithm>
#include <cmath>

namespace dgshock {

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::neumann_wave: return "neumann-wave";
    case BoundaryKind::dirichlet_farfield: return "dirichlet-farfield";
  }
  return "unknown";
}

BoundaryKind parse_boundary_kind(const std::string& name) {
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "neumann-wave" || name == "neumann") return BoundaryKind::neumann_wave;
  if (name == "dirichlet-farfield" || name == "farfield") return BoundaryKind::dirichlet_farfield;
  throw std::invalid_argument("unknown boundary condition '" + name + "'");
}

Mesh1D::Mesh1D(std::vector<double> vertices, BoundaryKind left, BoundaryKind right)
    : vertices_(std::move(vertices)), left_(left), right_(right) {
  if (vertices_.size() < 2) throw std::invalid_argument("mesh needs at least one element");
  for (std::size_t j = 0; j + 1 < vertices_.size(); ++j) {
    if (!(vertices_[j + 1] > vertices_[j]))
      throw std::invalid_argument("mesh vertices must be strictly increasing");
  }
  if ((left == BoundaryKind::periodic) != (right == BoundaryKind::periodic))
    throw std::invalid_argument("periodic boundary must be set on both ends or neither");
}

Mesh1D Mesh1D::uniform(double a, double b, int num_elements, BoundaryKind left,
                       BoundaryKind right) {
  if (num_elements < 1) throw std::invalid_argument("mesh needs at least one element");
  if (!(b > a)) throw std::invalid_argument("mesh domain must satisfy a < b");
  std::vector<double> v(num_elements + 1);
  for (int j = 0; j <= num_elements; ++j) v[j] = a + (b - a) * j / num_elements;
  v.back() = b;
  return Mesh1D(std::move(v), left, right);
}

double Mesh1D::h_min() const {
  double m = h(0);
  for (int k = 1; k < num_elements(); ++k) m = std::min(m, h(k));
  return m;
}

int Mesh1D::locate(double x) const {
  if (x <= a()) return 0;
  if (x >= b()) return num_elements() - 1;
  auto it = std::upper_bound(vertices_.begin(), vertices_.end(), x);
  const int k = static_cast<int>(it - vertices_.begin()) - 1;
  return std::clamp(k, 0, num_elements() - 1);
}

bool FieldState::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

std::vector<double> node_coordinates(const Mesh1D& mesh, const ReferenceElement& elem) {
  const int np = elem.num_nodes();
  std::vector<double> x(static_cast<std::size_t>(mesh.num_elements()) * np);
  for (int k = 0; k < mesh.num_elements(); ++k)
    for (int i = 0; i < np; ++i) x[k * np + i] = mesh.map_to_physical(k, elem.nodes()(i));
  return x;
}

double evaluate_on_element(const FieldState& state, int eq, int k,
                           const ReferenceElement& elem, double r) {
  const Eigen::VectorXd modal = elem.nodal_to_modal(state.element(eq, k));
  double v = 0.0;
  for (int n = 0; n < elem.num_nodes(); ++n) v += modal(n) * legendre_eval(n, r);
  return v;
}

double evaluate(const FieldState& state, int eq, const Mesh1D& mesh,
                const ReferenceElement& elem, double x) {
  const int k = mesh.locate(x);
  const double r = std::clamp(2.0 * (x - mesh.vertex(k)) / mesh.h(k) - 1.0, -1.0, 1.0);
  return evaluate_on_element(state, eq, k, elem, r);
}

}  // namespace dgshock
