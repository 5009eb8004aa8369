#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgshock/reference_element.hpp"

namespace dgshock {

enum class BoundaryKind { periodic, neumann_wave, dirichlet_farfield };

std::string to_string(BoundaryKind kind);
BoundaryKind parse_boundary_kind(const std::string& name);

/// Ordered partition of [a, b] into K intervals.
class Mesh1D {
 public:
  /// Throws std::invalid_argument when vertices are not strictly increasing,
  /// K < 1, or only one end is periodic.
  Mesh1D(std::vector<double> vertices, BoundaryKind left, BoundaryKind right);

  static Mesh1D uniform(double a, double b, int num_elements, BoundaryKind left,
                        BoundaryKind right);
  static Mesh1D uniform(double a, double b, int num_elements, BoundaryKind both) {
    return uniform(a, b, num_elements, both, both);
  }

  int num_elements() const { return static_cast<int>(vertices_.size()) - 1; }
  double a() const { return vertices_.front(); }
  double b() const { return vertices_.back(); }
  double length() const { return b() - a(); }
  double vertex(int j) const { return vertices_[j]; }
  const std::vector<double>& vertices() const { return vertices_; }
  double h(int k) const { return vertices_[k + 1] - vertices_[k]; }
  double h_min() const;
  BoundaryKind left_bc() const { return left_; }
  BoundaryKind right_bc() const { return right_; }
  bool periodic() const { return left_ == BoundaryKind::periodic; }

  /// x(r) = x_k + (1 + r)/2 * h_k.
  double map_to_physical(int k, double r) const {
    return vertices_[k] + 0.5 * (1.0 + r) * h(k);
  }
  /// Element containing x (the right element at interior vertices, the last
  /// element at x = b). x outside [a, b] is clamped.
  int locate(double x) const;

 private:
  std::vector<double> vertices_;
  BoundaryKind left_;
  BoundaryKind right_;
};

/// Nodal solution for an n-component system: values(eq, element, node).
class FieldState {
 public:
  FieldState() = default;
  FieldState(int num_equations, int num_elements, int num_nodes)
      : num_eq_(num_equations),
        num_elem_(num_elements),
        num_nodes_(num_nodes),
        values_(static_cast<std::size_t>(num_equations) * num_elements * num_nodes, 0.0) {}

  int num_equations() const { return num_eq_; }
  int num_elements() const { return num_elem_; }
  int num_nodes() const { return num_nodes_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  double& operator()(int eq, int k, int i) { return values_[index(eq, k, i)]; }
  double operator()(int eq, int k, int i) const { return values_[index(eq, k, i)]; }

  std::span<double> element(int eq, int k) {
    return {values_.data() + index(eq, k, 0), static_cast<std::size_t>(num_nodes_)};
  }
  std::span<const double> element(int eq, int k) const {
    return {values_.data() + index(eq, k, 0), static_cast<std::size_t>(num_nodes_)};
  }
  /// All K*Np values of one component, element-major.
  std::span<const double> component(int eq) const {
    return {values_.data() + index(eq, 0, 0),
            static_cast<std::size_t>(num_elem_) * num_nodes_};
  }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool all_finite() const;

 private:
  std::size_t index(int eq, int k, int i) const {
    return (static_cast<std::size_t>(eq) * num_elem_ + k) * num_nodes_ + i;
  }

  int num_eq_ = 0;
  int num_elem_ = 0;
  int num_nodes_ = 0;
  std::vector<double> values_;
  double time_ = 0.0;
};

/// Physical coordinates of all nodes, element-major (K*Np entries).
std::vector<double> node_coordinates(const Mesh1D& mesh, const ReferenceElement& elem);

/// Evaluates component eq of the piecewise polynomial solution at x.
double evaluate(const FieldState& state, int eq, const Mesh1D& mesh,
                const ReferenceElement& elem, double x);

/// Evaluates component eq on element k at reference coordinate r.
double evaluate_on_element(const FieldState& state, int eq, int k,
                           const ReferenceElement& elem, double r);

}  // namespace dgshock
