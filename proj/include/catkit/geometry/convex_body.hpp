#pragma once

#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace catkit::geometry {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// {x : <normal, x> <= offset}
struct HalfSpace {
  Vec normal;
  double offset = 0.0;
};

/// Closed ball.
struct Ball {
  Vec center;
  double radius = 0.0;
};

/// Intersection of half-spaces; an empty list is the whole space.
struct Polytope {
  int dim = 0;
  std::vector<HalfSpace> faces;
};

/// {y in R^dim : |w_i y_i - w_j y_j| <= radius}, where y_i is the i-th block
/// of `block` consecutive coordinates. Walls of hard-ball configuration spaces.
struct Cylinder {
  int dim = 0;
  int block = 3;
  int i = 0;
  int j = 1;
  double radius = 0.0;
  double weight_i = 1.0;
  double weight_j = 1.0;
};

/// Value, gradient and Hessian of one smooth convex constraint g(x) <= 0.
struct ConstraintEval {
  double value = 0.0;
  Vec grad;
  Mat hess;  // empty when zero
};

/// Entry of a ray x + t d into a body.
struct RayHit {
  double t = 0.0;
  bool grazing = false;
};

/// Smallest root of a t^2 + b t + c0 (the entry time of a ray into a
/// quadric region) if it exceeds t_min. Grazing when the discriminant is zero
/// to relative precision.
std::optional<RayHit> quadratic_entry(double a, double b, double c0, double t_min);

class ConvexBody {
 public:
  using Shape = std::variant<HalfSpace, Ball, Polytope, Cylinder>;

  ConvexBody(Shape shape);  // NOLINT: implicit on purpose
  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, Shape> && std::is_constructible_v<Shape, T>)
  ConvexBody(T&& s) : ConvexBody(Shape(std::forward<T>(s))) {}  // NOLINT
  const Shape& shape() const { return shape_; }

  int dimension() const;
  bool contains(const Vec& x, double tol = 0.0) const;
  /// Positive outside, <= 0 inside; scaled like a distance for half-space,
  /// ball and cylinder.
  double excess(const Vec& x) const;

  /// Nearest point. Exact for half-space, ball and cylinder; Dykstra's
  /// algorithm for polytopes.
  Vec project(const Vec& x) const;
  /// Nearest point of the boundary (smooth bodies only).
  Vec project_to_boundary(const Vec& x) const;
  /// Unit outward normal at (or radially from) x (smooth bodies only).
  Vec outward_normal(const Vec& x) const;

  /// Smooth constraints describing the body, g_k(x) <= 0.
  int constraint_count() const;
  ConstraintEval constraint(int k, const Vec& x) const;

  /// First t > t_min at which the ray from outside enters the body (smooth
  /// bodies only). Exit crossings are ignored.
  std::optional<RayHit> ray_entry(const Vec& x, const Vec& d, double t_min) const;

  bool smooth() const { return !std::holds_alternative<Polytope>(shape_); }

 private:
  Shape shape_;
};

}  // namespace catkit::geometry
